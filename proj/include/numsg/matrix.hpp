#pragma once

#include <cstddef>
#include <vector>

#include "numsg/rational.hpp"

namespace numsg {

/// Row-major dense matrix; only what the exact solvers need.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free (Bareiss) determinant of a square integer matrix. Every
/// intermediate division is exact, so entries stay integral and bounded by
/// the size of the minors.
Integer bareiss_determinant(DenseMatrix<Integer> m);

/// Determinant of a rational matrix: rows are scaled to integers, the
/// integer determinant is taken fraction-free, and the scaling undone.
Rational determinant(const DenseMatrix<Rational>& m);

/// Exact solution of a nonsingular square system A x = b. The augmented
/// matrix is scaled to integers and reduced with Bareiss elimination; back
/// substitution is done in rationals. Throws std::domain_error if singular.
std::vector<Rational> solve_exact(const DenseMatrix<Rational>& a, const std::vector<Rational>& b);

}  // namespace numsg
