#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace arrfiber {

// Square matrix over Q stored as sparse rows. Intersection matrices of
// resolution graphs are trees or near-trees, so elimination stays sparse.
class SparseRationalMatrix {
 public:
  explicit SparseRationalMatrix(std::size_t n) : rows_(n) {}

  std::size_t size() const noexcept { return rows_.size(); }
  void set(std::size_t i, std::size_t j, const mpq_class& value);
  mpq_class get(std::size_t i, std::size_t j) const;

  // Row-major int64 data of an n x n matrix.
  static SparseRationalMatrix from_dense(std::size_t n, const std::vector<std::int64_t>& data);

  std::vector<mpq_class> multiply(const std::vector<mpq_class>& x) const;

 private:
  friend std::vector<mpq_class> leading_principal_minors(SparseRationalMatrix m);
  friend std::vector<mpq_class> solve_exact(SparseRationalMatrix a, std::vector<mpq_class> rhs);

  std::vector<std::map<std::size_t, mpq_class>> rows_;
};

// D_1, ..., D_n from elimination in natural order without exchanges; each
// pivot equals D_k / D_{k-1}. Stops after the first vanishing minor, so the
// result is shorter than n exactly when some D_k = 0 (that D_k is included).
std::vector<mpq_class> leading_principal_minors(SparseRationalMatrix m);

// Exact solve of A x = rhs by rational Gaussian elimination with row exchange
// on zero pivots. Throws Error(SingularMatrix).
std::vector<mpq_class> solve_exact(SparseRationalMatrix a, std::vector<mpq_class> rhs);

}  // namespace arrfiber
