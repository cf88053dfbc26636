#include "arrfiber/verify.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "arrfiber/errors.hpp"
#include "arrfiber/exact_linalg.hpp"
#include "arrfiber/local.hpp"

namespace arrfiber {

namespace {

std::vector<mpq_class> adjunction_rhs(const ResolutionGraph& graph) {
  std::vector<mpq_class> k;
  k.reserve(graph.vertex_count());
  for (const auto& v : graph.vertices()) k.emplace_back(2 * v.genus - 2 + v.weight);
  return k;
}

// Closed-form coefficients laid out in graph vertex order.
std::vector<mpz_class> expand_to_vertices(const CanonicalCoefficients& c, const ResolutionGraph& graph) {
  std::vector<mpz_class> out;
  auto it = c.a.begin();
  if (graph.has_central()) out.emplace_back(*it++);
  const std::vector<std::int64_t> arm(it, c.a.end());
  for (std::size_t j = 0; j < graph.arm_count(); ++j) {
    for (const auto a : arm) out.emplace_back(a);
  }
  return out;
}

}  // namespace

std::vector<mpz_class> coefficients_from_matrix(const ResolutionGraph& graph) {
  const IntersectionMatrix m = intersection_matrix(graph);
  const auto solution = solve_exact(SparseRationalMatrix::from_dense(m.size(), m.data()), adjunction_rhs(graph));
  std::vector<mpz_class> out;
  out.reserve(solution.size());
  for (std::size_t i = 0; i < solution.size(); ++i) {
    if (solution[i].get_den() != 1) {
      fail(ErrorKind::NonIntegralCoefficient,
           "coefficient of " + graph.vertices()[i].label + " is " + solution[i].get_str());
    }
    out.push_back(solution[i].get_num());
  }
  return out;
}

OracleInvariants local_invariants_from_graph(const ResolutionGraph& graph) {
  const IntersectionMatrix m = intersection_matrix(graph);
  const auto a = coefficients_from_matrix(graph);
  const auto k = adjunction_rhs(graph);

  OracleInvariants out;
  mpz_class via_k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class row = 0;
    for (std::size_t j = 0; j < a.size(); ++j) row += m(i, j) * a[j];
    out.dci += a[i] * row;
    via_k += a[i] * k[i].get_num();
  }
  if (via_k != out.dci) fail(ErrorKind::InternalError, "a^T M a differs from a^T k");

  // chi of a union of curves: sum (2 - 2g) minus (m_p - 1) per point on m_p curves.
  mpz_class chi = 0;
  for (const auto& v : graph.vertices()) chi += 2 - 2 * v.genus;
  for (const auto& through : graph.meeting_points()) chi -= static_cast<long>(through.size()) - 1;
  out.dcii = chi - 1;
  return out;
}

OracleReport verify_pair(std::int64_t r, std::int64_t d) {
  const ResolutionGraph graph = build_resolution_graph(r, d);
  const OracleInvariants oracle = local_invariants_from_graph(graph);
  const LocalInvariants closed = local_invariants(r, d);

  OracleReport report;
  report.r = r;
  report.d = d;
  report.coefficients_match =
      coefficients_from_matrix(graph) == expand_to_vertices(canonical_coefficients(r, d), graph);
  report.oracle_dci = oracle.dci;
  report.oracle_dcii = oracle.dcii;
  report.closed_dci = closed.dci;
  report.closed_dcii = closed.dcii;
  report.dci_match = oracle.dci == closed.dci;
  report.dcii_match = oracle.dcii == closed.dcii;
  return report;
}

std::vector<OracleReport> sweep_verify(std::int64_t r_max, std::int64_t d_max) {
  if (r_max < 2) fail(ErrorKind::BadParameter, "r_max must be at least 2");
  if (d_max < r_max) fail(ErrorKind::BadParameter, "d_max must be at least r_max");
  if (d_max > kMaxLines) fail(ErrorKind::LimitExceeded, "d_max exceeds " + std::to_string(kMaxLines));

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t r = 2; r <= r_max; ++r) {
    for (std::int64_t d = r; d <= d_max; ++d) pairs.emplace_back(r, d);
  }

  // Pairs are independent; workers take a strided slice and write into their
  // own slots, so the output order never depends on scheduling.
  std::vector<OracleReport> reports(pairs.size());
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < pairs.size(); i += workers) reports[i] = verify_pair(pairs[i].first, pairs[i].second);
    }));
  }
  for (auto& job : jobs) job.get();
  return reports;
}

bool all_match(const std::vector<OracleReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const OracleReport& r) { return r.matches(); });
}

}  // namespace arrfiber
