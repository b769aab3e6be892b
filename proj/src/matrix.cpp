#include "numsg/matrix.hpp"

#include <stdexcept>

namespace numsg {

namespace {

// Forward Bareiss elimination in place over the first `pivot_cols` columns.
// Returns the sign picked up from row swaps, or 0 when a pivot column has
// no nonzero entry (singular).
int bareiss_forward(DenseMatrix<Integer>& m, std::size_t pivot_cols) {
  int sign = 1;
  Integer previous = 1;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < pivot_cols && k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign;
}

Integer row_denominator_lcm(const DenseMatrix<Rational>& m, std::size_t row, const Rational* extra) {
  Integer l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(row, j).get_den_mpz_t());
  if (extra != nullptr) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), extra->get_den_mpz_t());
  return l;
}

}  // namespace

Integer bareiss_determinant(DenseMatrix<Integer> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  const int sign = bareiss_forward(m, n);
  if (sign == 0) return 0;
  return sign > 0 ? m(n - 1, n - 1) : Integer(-m(n - 1, n - 1));
}

Rational determinant(const DenseMatrix<Rational>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  DenseMatrix<Integer> scaled(m.rows(), m.cols());
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Integer l = row_denominator_lcm(m, i, nullptr);
    scale *= l;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational v = m(i, j) * l;
      scaled(i, j) = v.get_num();
    }
  }
  Rational det(bareiss_determinant(std::move(scaled)), scale);
  det.canonicalize();
  return det;
}

std::vector<Rational> solve_exact(const DenseMatrix<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_exact: shape mismatch");
  DenseMatrix<Integer> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer l = row_denominator_lcm(a, i, &b[i]);
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(a(i, j) * l).get_num();
    aug(i, n) = Rational(b[i] * l).get_num();
  }
  if (bareiss_forward(aug, n) == 0 || aug(n - 1, n - 1) == 0) {
    throw std::domain_error("solve_exact: singular system");
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(aug(i, n));
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(aug(i, j)) * x[j];
    x[i] = acc / Rational(aug(i, i));
  }
  return x;
}

}  // namespace numsg
