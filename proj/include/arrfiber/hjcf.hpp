#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace arrfiber {

// Hirzebruch-Jung (minus-sign) continued fraction
//   alpha/beta = n_1 - 1/(n_2 - 1/(... - 1/n_lambda)),  every n_i >= 2.
// alpha = 1 (beta = 0) is the empty expansion.
struct HJExpansion {
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  std::vector<std::int64_t> terms;
  // Remainder sequence alpha_0 = alpha, alpha_1 = beta, ..., alpha_lambda = 1,
  // alpha_{lambda+1} = 0, linked by alpha_{i-1} = n_i alpha_i - alpha_{i+1}.
  std::vector<std::int64_t> remainders;

  std::size_t lambda() const noexcept { return terms.size(); }
};

// 2x2 integer matrix, row-major.
struct TwoByTwo {
  std::array<std::array<mpz_class, 2>, 2> m{};

  static TwoByTwo identity();
  mpz_class determinant() const;
  TwoByTwo operator*(const TwoByTwo& rhs) const;
  friend bool operator==(const TwoByTwo&, const TwoByTwo&) = default;
};

// The unique 0 < beta < alpha with bprime * beta = -1 (mod alpha); 0 when alpha = 1.
std::int64_t modular_beta(std::int64_t alpha, std::int64_t bprime);

HJExpansion hj_expand(std::int64_t alpha, std::int64_t beta);

// Bottom-up evaluation to a coprime pair; {} evaluates to (1, 0).
std::array<std::int64_t, 2> hj_evaluate(std::span<const std::int64_t> terms);

// G_1 G_2 ... G_lambda with G_i = [[n_i, -1], [1, 0]]. The first column is
// (alpha, beta); when beta came from modular_beta(alpha, b'), the second
// column is (b' - alpha, (1 + b' beta)/alpha - beta).
TwoByTwo g_product(std::span<const std::int64_t> terms);

// All prefix products G_1, G_1 G_2, ..., G_1 ... G_lambda.
std::vector<TwoByTwo> g_partial_products(std::span<const std::int64_t> terms);

}  // namespace arrfiber
