#include "arrfiber/exact_linalg.hpp"

#include <string>
#include <utility>

#include "arrfiber/errors.hpp"

namespace arrfiber {

namespace {

using Row = std::map<std::size_t, mpq_class>;

// target -= factor * source, dropping entries that cancel.
void axpy_row(Row& target, const Row& source, const mpq_class& factor) {
  for (const auto& [col, value] : source) {
    auto [it, inserted] = target.try_emplace(col, 0);
    it->second -= factor * value;
    if (sgn(it->second) == 0) target.erase(it);
  }
}

}  // namespace

void SparseRationalMatrix::set(std::size_t i, std::size_t j, const mpq_class& value) {
  if (sgn(value) == 0) {
    rows_.at(i).erase(j);
  } else {
    rows_.at(i)[j] = value;
  }
}

mpq_class SparseRationalMatrix::get(std::size_t i, std::size_t j) const {
  const auto& row = rows_.at(i);
  const auto it = row.find(j);
  return it == row.end() ? mpq_class(0) : it->second;
}

SparseRationalMatrix SparseRationalMatrix::from_dense(std::size_t n, const std::vector<std::int64_t>& data) {
  if (data.size() != n * n) fail(ErrorKind::BadParameter, "dense data does not describe an n x n matrix");
  SparseRationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (data[i * n + j] != 0) m.rows_[i][j] = mpq_class(data[i * n + j]);
    }
  }
  return m;
}

std::vector<mpq_class> SparseRationalMatrix::multiply(const std::vector<mpq_class>& x) const {
  std::vector<mpq_class> y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [j, value] : rows_[i]) y[i] += value * x.at(j);
  }
  return y;
}

std::vector<mpq_class> leading_principal_minors(SparseRationalMatrix m) {
  auto& rows = m.rows_;
  const std::size_t n = rows.size();
  std::vector<mpq_class> minors;
  minors.reserve(n);
  mpq_class running = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const mpq_class pivot = m.get(k, k);
    running *= pivot;
    minors.push_back(running);
    if (sgn(pivot) == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      const auto it = rows[i].find(k);
      if (it == rows[i].end()) continue;
      const mpq_class factor = it->second / pivot;
      axpy_row(rows[i], rows[k], factor);
    }
  }
  return minors;
}

std::vector<mpq_class> solve_exact(SparseRationalMatrix a, std::vector<mpq_class> rhs) {
  auto& rows = a.rows_;
  const std::size_t n = rows.size();
  if (rhs.size() != n) fail(ErrorKind::BadParameter, "right-hand side has wrong length");

  for (std::size_t k = 0; k < n; ++k) {
    if (!rows[k].contains(k)) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && !rows[swap_with].contains(k)) ++swap_with;
      if (swap_with == n) fail(ErrorKind::SingularMatrix, "no pivot in column " + std::to_string(k));
      std::swap(rows[k], rows[swap_with]);
      std::swap(rhs[k], rhs[swap_with]);
    }
    const mpq_class pivot = rows[k].at(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const auto it = rows[i].find(k);
      if (it == rows[i].end()) continue;
      const mpq_class factor = it->second / pivot;
      axpy_row(rows[i], rows[k], factor);
      rhs[i] -= factor * rhs[k];
    }
  }

  std::vector<mpq_class> x(n);
  for (std::size_t k = n; k-- > 0;) {
    mpq_class acc = rhs[k];
    for (const auto& [col, value] : rows[k]) {
      if (col > k) acc -= value * x[col];
    }
    x[k] = acc / rows[k].at(k);
  }
  return x;
}

}  // namespace arrfiber
