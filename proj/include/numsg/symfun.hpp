#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "numsg/error.hpp"
#include "numsg/piecewise.hpp"
#include "numsg/polynomial.hpp"
#include "numsg/rational.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// h_0, ..., h_p of the given variables, from
///   h_j(x_1..x_i) = h_j(x_1..x_{i-1}) + x_i h_{j-1}(x_1..x_i),
/// i.e. the coefficients of prod_i 1/(1 - x_i z). O(k p) operations.
template <class Scalar>
std::vector<Scalar> h_complete_sequence(unsigned p, std::span<const Scalar> xs) {
  std::vector<Scalar> h(p + 1, Scalar(0));
  h[0] = Scalar(1);
  for (const Scalar& x : xs) {
    for (unsigned j = 1; j <= p; ++j) h[j] += x * h[j - 1];
  }
  return h;
}

/// Complete homogeneous symmetric polynomial h_p(x_1, ..., x_k).
template <class Scalar>
Scalar h_complete(unsigned p, std::span<const Scalar> xs) {
  return h_complete_sequence<Scalar>(p, xs).back();
}

inline Rational h_complete(unsigned p, const std::vector<Rational>& xs) {
  return h_complete<Rational>(p, std::span<const Rational>(xs));
}

template <class Scalar>
using HDensity = PiecewisePolynomial<Scalar>;

/// The density H(x; x_1..x_k) = (k-1)/2 sum_r |x_r - x| (x_r - x)^{k-3} / prod_{j != r}(x_r - x_j)
/// as a piecewise polynomial of degree k-2 on consecutive nodes. On the piece
/// (x_i, x_{i+1}) the factor |x_r - x| is +(x_r - x) for r > i and -(x_r - x)
/// otherwise. Rational nodes give an exact representation.
/// Throws NodesNotSorted / NodesNotDistinct; requires k >= 3.
template <class Scalar>
HDensity<Scalar> build_H(const std::vector<Scalar>& xs) {
  const std::size_t k = xs.size();
  if (k < 3) throw Error(ErrorCode::WrongArity, "H needs at least 3 nodes");
  for (std::size_t i = 1; i < k; ++i) {
    if (xs[i] == xs[i - 1]) throw Error(ErrorCode::NodesNotDistinct, "repeated node");
    if (xs[i] < xs[i - 1]) throw Error(ErrorCode::NodesNotSorted, "nodes must be increasing");
  }
  // c_r = (k-1) / (2 prod_{j != r} (x_r - x_j)), and the term polynomial (x_r - x)^{k-2}.
  std::vector<Scalar> weight(k);
  std::vector<Polynomial<Scalar>> power(k);
  for (std::size_t r = 0; r < k; ++r) {
    Scalar denom(2);
    for (std::size_t j = 0; j < k; ++j) {
      if (j != r) denom *= Scalar(xs[r] - xs[j]);
    }
    weight[r] = Scalar(Scalar(static_cast<long>(k - 1)) / denom);
    power[r] = Polynomial<Scalar>::linear(xs[r], Scalar(-1)).pow(static_cast<unsigned>(k - 2));
  }
  std::vector<Polynomial<Scalar>> pieces;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Polynomial<Scalar> piece;
    for (std::size_t r = 0; r < k; ++r) {
      const Scalar w = r > i ? weight[r] : Scalar(-weight[r]);
      piece += power[r] * w;
    }
    pieces.push_back(std::move(piece));
  }
  return HDensity<Scalar>(xs, std::move(pieces));
}

/// h_z(x_1..x_k) = (z+k-1)...(z+1)/(k-1)! * integral of t^z H(t; x) dt for
/// real z and positive nodes (any order). Each piece is integrated in closed
/// form against t^{z+m} (log t where z+m = -1) in 256-bit arithmetic; when
/// the rounding bound of that route exceeds abs_tol the integral falls back
/// to adaptive quadrature. Throws NonPositiveNode, NodesNotDistinct,
/// ToleranceNotMet.
double h_fractional(double z, std::vector<double> xs, double abs_tol = 1e-12);

/// det[1, x, ..., x^{k-2}, x^{p+k-1}] - h_p(x) det V(x), exactly.
/// Zero by Jacobi's bialternant formula. Requires pairwise distinct nodes,
/// k >= 2 and p <= max_p.
Rational schur_identity_residual(unsigned p, const std::vector<Rational>& xs, unsigned max_p = 12);

/// |sum_{p=0}^{T} h_p z^{p+k-1}/(p+k-1)! - sum_r e^{x_r z}/prod_{j != r}(x_r - x_j)|
/// evaluated in long double. Requires distinct nonzero nodes.
double egf_residual(const std::vector<double>& xs, std::complex<double> z, unsigned truncation);

/// Characteristic function of H(.; xs):
///   (k-1)! sum_r e^{i x_r z} / ((iz)^{k-1} prod_{j != r}(x_r - x_j)),
/// switching to sum_p (k-1)! h_p (iz)^p/(p+k-1)! when |z| max|x_r| is small
/// (the closed form has a removable singularity at 0).
std::complex<double> characteristic_fn(const std::vector<double>& xs, double z);

/// Limiting characteristic function for S, nodes 1/n_r.
std::complex<double> characteristic_fn(const NumericalSemigroup& s, double z);

std::complex<double> characteristic_fn_series(const std::vector<double>& xs, double z);
std::complex<double> characteristic_fn_closed(const std::vector<double>& xs, double z);

/// |z| * max|x_r| below which characteristic_fn uses the power series.
inline constexpr double kCharacteristicSeriesRadius = 8.0;

}  // namespace numsg
