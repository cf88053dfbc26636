#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "arrfiber/resolution.hpp"

namespace arrfiber {

// Coefficients a_i of the exceptional curves in K~ = pi^* K + sum a_i E_i,
// one entry per curve class (all arms share coefficients at equal depth).
//   Star:          [a_0, a_1, ..., a_lambda]
//   BlownDownStar: [a_1, ..., a_lambda]
//   Chain:         d - 1 zeros
struct CanonicalCoefficients {
  GraphShape shape = GraphShape::Chain;
  std::vector<std::int64_t> a;
};

// Changes of c_1^2, Euler number and Miyaoka-Yau number caused by resolving
// one singularity of multiplicity r, plus E = DMY + (d-1)(r-1)(3-r), its
// contribution to MY of the resolved surface.
struct LocalInvariants {
  mpz_class dci;
  mpz_class dcii;
  mpz_class dmy;
  mpz_class e;

  friend bool operator==(const LocalInvariants&, const LocalInvariants&) = default;
};

CanonicalCoefficients canonical_coefficients(std::int64_t r, std::int64_t d);

LocalInvariants local_invariants(std::int64_t r, std::int64_t d);

}  // namespace arrfiber
