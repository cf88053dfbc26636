#include "arrfiber/hjcf.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "arrfiber/errors.hpp"

namespace arrfiber {

namespace {

void check_terms(std::span<const std::int64_t> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] < 2) {
      fail(ErrorKind::TermTooSmall, "term " + std::to_string(i + 1) + " is " + std::to_string(terms[i]) + " < 2");
    }
  }
}

TwoByTwo g_factor(std::int64_t n) {
  TwoByTwo g;
  g.m = {{{mpz_class(n), mpz_class(-1)}, {mpz_class(1), mpz_class(0)}}};
  return g;
}

}  // namespace

TwoByTwo TwoByTwo::identity() {
  TwoByTwo id;
  id.m = {{{mpz_class(1), mpz_class(0)}, {mpz_class(0), mpz_class(1)}}};
  return id;
}

mpz_class TwoByTwo::determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

TwoByTwo TwoByTwo::operator*(const TwoByTwo& rhs) const {
  TwoByTwo out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
  }
  return out;
}

std::int64_t modular_beta(std::int64_t alpha, std::int64_t bprime) {
  if (alpha < 1 || bprime < 1) fail(ErrorKind::BadParameter, "alpha and b' must be positive");
  if (std::gcd(alpha, bprime) != 1) {
    fail(ErrorKind::NotCoprime, "gcd(" + std::to_string(alpha) + ", " + std::to_string(bprime) + ") != 1");
  }
  if (alpha == 1) return 0;
  // Extended Euclid for the inverse of b' modulo alpha.
  std::int64_t old_r = bprime % alpha, r = alpha;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  const std::int64_t inverse = ((old_s % alpha) + alpha) % alpha;
  return (alpha - inverse) % alpha;
}

HJExpansion hj_expand(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 1) fail(ErrorKind::BadParameter, "alpha must be positive");
  if (alpha == 1) {
    if (beta != 0) fail(ErrorKind::BetaOutOfRange, "alpha = 1 needs beta = 0");
    HJExpansion out;
    out.remainders = {1, 0};
    return out;
  }
  if (beta <= 0 || beta >= alpha) {
    fail(ErrorKind::BetaOutOfRange, "need 0 < beta < alpha, got beta=" + std::to_string(beta));
  }
  if (std::gcd(alpha, beta) != 1) {
    fail(ErrorKind::NotCoprime, "gcd(" + std::to_string(alpha) + ", " + std::to_string(beta) + ") != 1");
  }
  HJExpansion out;
  out.alpha = alpha;
  out.beta = beta;
  out.remainders = {alpha, beta};
  std::int64_t prev = alpha, cur = beta;
  while (cur > 0) {
    const std::int64_t n = (prev + cur - 1) / cur;
    out.terms.push_back(n);
    prev = std::exchange(cur, n * cur - prev);
    out.remainders.push_back(cur);
  }
  return out;
}

std::array<std::int64_t, 2> hj_evaluate(std::span<const std::int64_t> terms) {
  check_terms(terms);
  // value = num/den, starting from the innermost term; (1, 0) is "infinity",
  // so n - 1/infinity = n.
  std::int64_t num = 1, den = 0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::int64_t next = 0;
    if (__builtin_mul_overflow(*it, num, &next) || __builtin_sub_overflow(next, den, &next)) {
      fail(ErrorKind::LimitExceeded, "continued fraction value exceeds 64-bit range");
    }
    den = std::exchange(num, next);
  }
  return {num, den};
}

TwoByTwo g_product(std::span<const std::int64_t> terms) {
  check_terms(terms);
  TwoByTwo g = TwoByTwo::identity();
  for (const auto n : terms) g = g * g_factor(n);
  return g;
}

std::vector<TwoByTwo> g_partial_products(std::span<const std::int64_t> terms) {
  check_terms(terms);
  std::vector<TwoByTwo> out;
  out.reserve(terms.size());
  TwoByTwo g = TwoByTwo::identity();
  for (const auto n : terms) {
    g = g * g_factor(n);
    out.push_back(g);
  }
  return out;
}

}  // namespace arrfiber
