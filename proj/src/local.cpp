#include "arrfiber/local.hpp"

#include "arrfiber/errors.hpp"
#include "arrfiber/hjcf.hpp"

namespace arrfiber {

namespace {

void check_multiplicity(std::int64_t r, std::int64_t d) {
  if (r < 2 || r > d) {
    fail(ErrorKind::BadMultiplicity, "need 2 <= r <= d, got r=" + std::to_string(r) + ", d=" + std::to_string(d));
  }
}

std::vector<std::int64_t> arm_terms(const WeightData& w) {
  return w.alpha > 1 ? hj_expand(w.alpha, w.beta).terms : std::vector<std::int64_t>{};
}

// Residuals of the adjunction system along one arm:
//   -n_k a_k + a_{k-1} + a_{k+1} - (n_k - 2),  a_{lambda+1} = 0,
// where `before` plays a_0 for k = 1.
bool arm_equations_hold(const std::vector<std::int64_t>& n, const std::vector<std::int64_t>& a, std::size_t first,
                        std::int64_t before) {
  const std::size_t lambda = n.size();
  for (std::size_t k = first; k < lambda; ++k) {
    const std::int64_t prev = k == 0 ? before : a[k - 1];
    const std::int64_t next = k + 1 < lambda ? a[k + 1] : 0;
    if (-n[k] * a[k] + prev + next != n[k] - 2) return false;
  }
  return true;
}

}  // namespace

CanonicalCoefficients canonical_coefficients(std::int64_t r, std::int64_t d) {
  check_multiplicity(r, d);
  CanonicalCoefficients out;
  if (r == 2) {
    out.shape = GraphShape::Chain;
    out.a.assign(static_cast<std::size_t>(d - 1), 0);
    return out;
  }

  const WeightData w = weight_data(r, d);
  const std::vector<std::int64_t> n = arm_terms(w);
  const std::int64_t lambda = static_cast<std::int64_t>(n.size());

  if (d % r == 1) {
    out.shape = GraphShape::BlownDownStar;
    for (std::int64_t k = 1; k <= lambda; ++k) out.a.push_back(-(r - 2) * (lambda + 1 - k));
    // Root equation after contraction: -(n_1 - 1) a_1 + (r - 1) a_1 + a_2 = n_1 - 3.
    const std::int64_t root = n.front() - 1;
    const std::int64_t a2 = lambda > 1 ? out.a[1] : 0;
    const bool ok = -root * out.a[0] + (r - 1) * out.a[0] + a2 == root - 2 &&
                    arm_equations_hold(n, out.a, 1, 0);
    if (!ok) fail(ErrorKind::InternalError, "blown-down coefficients violate the adjunction system");
    return out;
  }

  out.shape = GraphShape::Star;
  const std::int64_t central = (1 + w.bprime * w.beta) / w.alpha;
  out.a.push_back((2 - r) * w.alpha + w.bprime - 1);
  if (lambda > 0) {
    out.a.push_back((2 - r) * w.beta + central - 1);
    for (std::int64_t k = 1; k < lambda; ++k) {
      const std::int64_t nk = n[static_cast<std::size_t>(k - 1)];
      out.a.push_back(nk * out.a[k] - out.a[k - 1] + nk - 2);
    }
    if (out.a.back() != -(r - 2)) fail(ErrorKind::InternalError, "tip coefficient differs from -(r-2)");
  }

  const std::int64_t a1 = lambda > 0 ? out.a[1] : 0;
  const std::vector<std::int64_t> arm(out.a.begin() + 1, out.a.end());
  const bool ok = -w.b * out.a[0] + r * a1 == (r - 2) * (w.g - 1) - 2 + w.b &&
                  arm_equations_hold(n, arm, 0, out.a[0]);
  if (!ok) fail(ErrorKind::InternalError, "star coefficients violate the adjunction system");
  return out;
}

LocalInvariants local_invariants(std::int64_t r, std::int64_t d) {
  check_multiplicity(r, d);
  const mpz_class R = r, D = d;
  LocalInvariants out;
  if (r == 2) {
    out.dci = 0;
    out.dcii = D - 1;
  } else if (d % r == 1) {
    out.dci = -(D - 1) * (R - 2) * (R - 2);
    out.dcii = D - 1;
  } else {
    const WeightData w = weight_data(r, d);
    const std::vector<std::int64_t> n = arm_terms(w);
    mpz_class excess = 0;
    for (const auto nk : n) excess += nk - 2;
    const mpz_class lambda = static_cast<long>(n.size());
    const mpz_class g = w.g;
    out.dci = -D * (R - 2) * (R - 2) - R * excess + 2 * (R - 2) * (R - g) + (R - w.b);
    out.dcii = 1 + R * lambda - (R - 2) * (g - 1);
  }
  out.dmy = 3 * out.dcii - out.dci;
  out.e = out.dmy + (D - 1) * (R - 1) * (3 - R);
  return out;
}

}  // namespace arrfiber
