#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arrfiber {

// Weighted-homogeneous data of the germ G_r(u, v) + t^d = 0 (2 <= r <= d):
// weights (d/g, d/g, r/g) with g = gcd(r, d), degree N = rd/g, and the
// star-resolution numbers alpha = d/g, b' = r/g, beta, central weight b and
// the genus of the central curve.
struct WeightData {
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::int64_t g = 0;
  std::int64_t w1 = 0, w2 = 0, w3 = 0;
  std::int64_t N = 0;
  std::int64_t alpha = 0;
  std::int64_t bprime = 0;
  std::int64_t beta = 0;
  std::int64_t b = 0;
  std::int64_t genus0 = 0;
};

WeightData weight_data(std::int64_t r, std::int64_t d);

// The genus of the central curve from the weighted-degree expression
//   1/2 [N^2/(w1 w2 w3) - sum_{i<j} N gcd(w_i, w_j)/(w_i w_j) + sum_i gcd(N, w_i)/w_i - 1],
// evaluated over Q. Agrees with WeightData::genus0.
mpq_class genus_from_weights(const WeightData& w);

enum class GraphShape { Star, BlownDownStar, Chain };

std::string_view shape_name(GraphShape shape) noexcept;

struct GraphVertex {
  std::int64_t weight = 0;  // -E^2
  std::int64_t genus = 0;
  std::string label;        // "c" or "a<arm>_<pos>", 1-based
};

// Dual graph of the minimal resolution. Vertex order is fixed: the central
// curve first (Star only), then arm 1 from root to tip, arm 2, ... A Chain is
// stored as a single arm.
class ResolutionGraph {
 public:
  std::int64_t r() const noexcept { return r_; }
  std::int64_t d() const noexcept { return d_; }
  GraphShape shape() const noexcept { return shape_; }
  // Arm length; for a Chain this is the chain length d - 1.
  std::size_t lambda() const noexcept { return arm_.size(); }
  std::size_t arm_count() const noexcept { return arms_; }
  // Weights along one arm, root to tip (root already reduced after blow-down).
  const std::vector<std::int64_t>& arm_weights() const noexcept { return arm_; }
  bool has_central() const noexcept { return shape_ == GraphShape::Star; }
  std::int64_t central_weight() const noexcept { return central_weight_; }
  std::int64_t central_genus() const noexcept { return central_genus_; }
  bool minimal() const noexcept { return true; }

  const std::vector<GraphVertex>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arm_vertex(std::size_t arm, std::size_t pos) const;

  // Intersection points of the exceptional configuration, each listing the
  // curves through it. The arm roots of a BlownDownStar share one point.
  const std::vector<std::vector<std::size_t>>& meeting_points() const noexcept { return points_; }
  // Unordered adjacent pairs (i < j), one per pair of curves meeting.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  friend ResolutionGraph build_resolution_graph(std::int64_t r, std::int64_t d);
  ResolutionGraph() = default;
  void assemble();

  std::int64_t r_ = 0;
  std::int64_t d_ = 0;
  GraphShape shape_ = GraphShape::Chain;
  std::size_t arms_ = 1;
  std::vector<std::int64_t> arm_;
  std::int64_t central_weight_ = 0;
  std::int64_t central_genus_ = 0;
  std::vector<GraphVertex> vertices_;
  std::vector<std::vector<std::size_t>> points_;
};

// r = 2: the A_{d-1} chain. d = 1 mod r (r >= 3): the star with its
// central (-1)-curve contracted. Otherwise the star itself.
ResolutionGraph build_resolution_graph(std::int64_t r, std::int64_t d);

class IntersectionMatrix {
 public:
  explicit IntersectionMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  // Throws BadParameter unless the rows form a square matrix.
  static IntersectionMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }
  bool symmetric() const;

  friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> data_;
};

IntersectionMatrix intersection_matrix(const ResolutionGraph& graph);

// Sylvester: (-1)^k D_k > 0 for every leading principal minor, exactly. The
// minors are taken in reversed vertex order, which is a symmetric permutation.
// Throws NotSymmetric.
bool check_negative_definite(const IntersectionMatrix& m);

// Graphviz rendering: nodes c, a<arm>_<pos> labelled w=<weight> (and g=<genus>
// for the central curve); undirected edges in vertex order.
std::string to_dot(const ResolutionGraph& graph);

}  // namespace arrfiber
