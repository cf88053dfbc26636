#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "arrfiber/resolution.hpp"

namespace arrfiber {

// Solves M a = k exactly, where M is the intersection matrix of the graph and
// k_v = 2 g(v) - 2 + weight(v) comes from adjunction. One entry per vertex in
// graph order. Throws NonIntegralCoefficient if the solution is not integral.
std::vector<mpz_class> coefficients_from_matrix(const ResolutionGraph& graph);

struct OracleInvariants {
  mpz_class dci;   // a^T M a
  mpz_class dcii;  // Euler number of the exceptional configuration, minus 1
};

OracleInvariants local_invariants_from_graph(const ResolutionGraph& graph);

struct OracleReport {
  std::int64_t r = 0;
  std::int64_t d = 0;
  bool coefficients_match = false;
  bool dci_match = false;
  bool dcii_match = false;
  mpz_class oracle_dci;
  mpz_class oracle_dcii;
  mpz_class closed_dci;
  mpz_class closed_dcii;

  bool matches() const noexcept { return coefficients_match && dci_match && dcii_match; }
};

// Compares the graph-only oracle with the closed forms of module local.
OracleReport verify_pair(std::int64_t r, std::int64_t d);

// Every 2 <= r <= min(r_max, d), r <= d <= d_max, ordered by (r, d).
std::vector<OracleReport> sweep_verify(std::int64_t r_max, std::int64_t d_max);

bool all_match(const std::vector<OracleReport>& reports);

}  // namespace arrfiber
