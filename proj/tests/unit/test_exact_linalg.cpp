#include <gtest/gtest.h>

#include <random>

#include "arrfiber/exact_linalg.hpp"
#include "test_util.hpp"

using namespace arrfiber;

namespace {

// Leibniz expansion, for cross-checking elimination on small matrices.
mpq_class leibniz_det(const std::vector<std::vector<mpq_class>>& a, std::size_t k) {
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < k; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(SparseMatrix, SetGetMultiply) {
  SparseRationalMatrix m(3);
  m.set(0, 0, 2);
  m.set(1, 2, mpq_class(1, 3));
  m.set(2, 1, -1);
  m.set(0, 0, 0);
  EXPECT_EQ(m.get(0, 0), 0);
  EXPECT_EQ(m.get(1, 2), mpq_class(1, 3));
  const auto y = m.multiply({1, 2, 3});
  EXPECT_EQ(y[0], 0);
  EXPECT_EQ(y[1], 1);
  EXPECT_EQ(y[2], -2);
}

TEST(LeadingMinors, MatchLeibniz) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::int64_t> flat(n * n);
    std::vector<std::vector<mpq_class>> dense(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        flat[i * n + j] = static_cast<std::int64_t>(rng() % 7) - 3;
        dense[i][j] = flat[i * n + j];
      }
    const auto minors = leading_principal_minors(SparseRationalMatrix::from_dense(n, flat));
    ASSERT_GE(minors.size(), 1u);
    for (std::size_t k = 1; k <= minors.size(); ++k) ASSERT_EQ(minors[k - 1], leibniz_det(dense, k));
    if (minors.size() < n) ASSERT_EQ(minors.back(), 0);
  }
}

TEST(SolveExact, RandomSystems) {
  std::mt19937_64 rng(5);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<std::int64_t> flat(n * n);
    for (auto& x : flat) x = static_cast<std::int64_t>(rng() % 9) - 4;
    std::vector<mpq_class> rhs(n);
    for (auto& x : rhs) x = static_cast<long>(rng() % 11) - 5;
    const auto a = SparseRationalMatrix::from_dense(n, flat);
    try {
      const auto x = solve_exact(a, rhs);
      EXPECT_EQ(a.multiply(x), rhs);
      ++solved;
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::SingularMatrix);
      std::vector<std::vector<mpq_class>> dense(n, std::vector<mpq_class>(n));
      for (std::size_t i = 0; i < n * n; ++i) dense[i / n][i % n] = flat[i];
      EXPECT_EQ(leibniz_det(dense, n), 0);
    }
  }
  EXPECT_GT(solved, 200);
}

TEST(SolveExact, NeedsRowExchange) {
  const auto a = SparseRationalMatrix::from_dense(2, {0, 1, 1, 0});
  const auto x = solve_exact(a, {3, 4});
  EXPECT_EQ(x[0], 4);
  EXPECT_EQ(x[1], 3);
}

TEST(SolveExact, Singular) {
  EXPECT_ERROR_KIND(solve_exact(SparseRationalMatrix::from_dense(2, {1, 2, 2, 4}), {1, 2}), SingularMatrix);
}
