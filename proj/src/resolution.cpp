#include "arrfiber/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arrfiber/errors.hpp"
#include "arrfiber/exact_linalg.hpp"
#include "arrfiber/hjcf.hpp"

namespace arrfiber {

namespace {

void check_multiplicity(std::int64_t r, std::int64_t d) {
  if (r < 2 || r > d) {
    fail(ErrorKind::BadMultiplicity, "need 2 <= r <= d, got r=" + std::to_string(r) + ", d=" + std::to_string(d));
  }
  if (d > kMaxLines) fail(ErrorKind::LimitExceeded, "d exceeds " + std::to_string(kMaxLines));
}

}  // namespace

WeightData weight_data(std::int64_t r, std::int64_t d) {
  check_multiplicity(r, d);
  WeightData w;
  w.r = r;
  w.d = d;
  w.g = std::gcd(r, d);
  w.w1 = d / w.g;
  w.w2 = d / w.g;
  w.w3 = r / w.g;
  w.N = r * d / w.g;
  w.alpha = w.w1;
  w.bprime = w.w3;
  w.beta = modular_beta(w.alpha, w.bprime);

  const std::int64_t numer = w.g * (1 + w.bprime * w.beta);
  if (numer % w.alpha != 0) fail(ErrorKind::InternalError, "central weight is not integral");
  w.b = numer / w.alpha;

  const std::int64_t twice_genus = (r - 2) * (w.g - 1);
  if (twice_genus % 2 != 0) fail(ErrorKind::InternalError, "central genus is not integral");
  w.genus0 = twice_genus / 2;
  return w;
}

mpq_class genus_from_weights(const WeightData& w) {
  const std::int64_t ws[3] = {w.w1, w.w2, w.w3};
  const mpz_class N = w.N;
  mpq_class sum = mpq_class(N * N, mpz_class(w.w1) * w.w2 * w.w3);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      sum -= mpq_class(N * std::gcd(ws[i], ws[j]), mpz_class(ws[i]) * ws[j]);
    }
  }
  for (const auto wi : ws) sum += mpq_class(std::gcd(w.N, wi), wi);
  sum -= 1;
  sum /= 2;
  sum.canonicalize();
  return sum;
}

std::string_view shape_name(GraphShape shape) noexcept {
  switch (shape) {
    case GraphShape::Star: return "Star";
    case GraphShape::BlownDownStar: return "BlownDownStar";
    case GraphShape::Chain: return "Chain";
  }
  return "Unknown";
}

std::size_t ResolutionGraph::arm_vertex(std::size_t arm, std::size_t pos) const {
  if (arm >= arms_ || pos >= arm_.size()) fail(ErrorKind::BadParameter, "arm vertex out of range");
  return (has_central() ? 1 : 0) + arm * arm_.size() + pos;
}

void ResolutionGraph::assemble() {
  vertices_.clear();
  points_.clear();
  if (has_central()) vertices_.push_back({central_weight_, central_genus_, "c"});
  for (std::size_t a = 0; a < arms_; ++a) {
    for (std::size_t k = 0; k < arm_.size(); ++k) {
      vertices_.push_back({arm_[k], 0, "a" + std::to_string(a + 1) + "_" + std::to_string(k + 1)});
    }
  }
  if (arm_.empty()) return;
  if (shape_ == GraphShape::Star) {
    for (std::size_t a = 0; a < arms_; ++a) points_.push_back({0, arm_vertex(a, 0)});
  } else if (shape_ == GraphShape::BlownDownStar) {
    std::vector<std::size_t> roots;
    for (std::size_t a = 0; a < arms_; ++a) roots.push_back(arm_vertex(a, 0));
    points_.push_back(std::move(roots));
  }
  for (std::size_t a = 0; a < arms_; ++a) {
    for (std::size_t k = 0; k + 1 < arm_.size(); ++k) points_.push_back({arm_vertex(a, k), arm_vertex(a, k + 1)});
  }
}

std::vector<std::pair<std::size_t, std::size_t>> ResolutionGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& through : points_) {
    for (std::size_t i = 0; i < through.size(); ++i) {
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        out.emplace_back(std::min(through[i], through[j]), std::max(through[i], through[j]));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ResolutionGraph build_resolution_graph(std::int64_t r, std::int64_t d) {
  check_multiplicity(r, d);
  ResolutionGraph graph;
  graph.r_ = r;
  graph.d_ = d;
  if (r == 2) {
    graph.shape_ = GraphShape::Chain;
    graph.arms_ = 1;
    graph.arm_.assign(static_cast<std::size_t>(d - 1), 2);
    graph.assemble();
    return graph;
  }

  const WeightData w = weight_data(r, d);
  graph.arms_ = static_cast<std::size_t>(r);
  if (w.alpha > 1) graph.arm_ = hj_expand(w.alpha, w.beta).terms;

  if (d % r == 1) {
    // Central curve is a rational (-1)-curve; contracting it lowers each root
    // weight by one and makes the roots meet pairwise. n_1 = r + 1, so the
    // new roots have weight r >= 3 and no further contraction is possible.
    if (w.genus0 != 0 || w.b != 1 || graph.arm_.empty() || graph.arm_.front() != r + 1) {
      fail(ErrorKind::InternalError, "unexpected star data for d = 1 mod r");
    }
    graph.shape_ = GraphShape::BlownDownStar;
    graph.arm_.front() -= 1;
  } else {
    graph.shape_ = GraphShape::Star;
    graph.central_weight_ = w.b;
    graph.central_genus_ = w.genus0;
  }
  graph.assemble();
  return graph;
}

IntersectionMatrix IntersectionMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntersectionMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) fail(ErrorKind::BadParameter, "matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntersectionMatrix::symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntersectionMatrix intersection_matrix(const ResolutionGraph& graph) {
  IntersectionMatrix m(graph.vertex_count());
  const auto& vertices = graph.vertices();
  for (std::size_t i = 0; i < vertices.size(); ++i) m(i, i) = -vertices[i].weight;
  for (const auto& [i, j] : graph.edges()) {
    m(i, j) += 1;
    m(j, i) += 1;
  }
  return m;
}

bool check_negative_definite(const IntersectionMatrix& m) {
  if (!m.symmetric()) fail(ErrorKind::NotSymmetric, "intersection matrix must be symmetric");
  // Sylvester on the reversed vertex order: a symmetric permutation, so
  // definiteness is unchanged, and eliminating arm tips first keeps trees
  // free of fill-in.
  const std::size_t n = m.size();
  SparseRationalMatrix reversed(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) reversed.set(n - 1 - i, n - 1 - j, m(i, j));
  const auto minors = leading_principal_minors(std::move(reversed));
  if (minors.size() < m.size()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // D_1 < 0, D_2 > 0, ...
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != expected) return false;
  }
  return true;
}

std::string to_dot(const ResolutionGraph& graph) {
  std::ostringstream out;
  out << "graph resolution_r" << graph.r() << "_d" << graph.d() << " {\n";
  for (const auto& v : graph.vertices()) {
    out << "  " << v.label << " [label=\"w=" << v.weight;
    if (v.label == "c") out << " g=" << v.genus;
    out << "\"];\n";
  }
  const auto& vertices = graph.vertices();
  for (const auto& [i, j] : graph.edges()) out << "  " << vertices[i].label << " -- " << vertices[j].label << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace arrfiber
