#include "numsg/symfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "numsg/matrix.hpp"
#include "numsg/quadrature.hpp"

namespace numsg {

namespace {

using ComplexLD = std::complex<long double>;

void require_distinct(const std::vector<double>& xs) {
  std::vector<double> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::NodesNotDistinct, "repeated node");
  }
}

// Integral of t^z * piece(t) over [lo, hi], 0 < lo < hi, in 256-bit floats.
// `magnitude` accumulates the sum of absolute term values for the rounding bound.
BigFloat integrate_power_times_polynomial(const Polynomial<Rational>& piece, const BigFloat& z, const Rational& lo,
                                          const Rational& hi, BigFloat& magnitude) {
  const BigFloat a(lo);
  const BigFloat b(hi);
  const BigFloat log_a = log(a);
  const BigFloat log_b = log(b);
  BigFloat sum;
  for (std::size_t m = 0; m < piece.coeffs().size(); ++m) {
    const Rational& c = piece.coeffs()[m];
    if (c == 0) continue;
    const BigFloat e = z + BigFloat(static_cast<double>(m + 1));
    BigFloat integral;
    if (mpfr_zero_p(e.get())) {
      integral = log_b - log_a;
    } else {
      integral = (exp(e * log_b) - exp(e * log_a)) / e;
    }
    const BigFloat term = BigFloat(c) * integral;
    sum += term;
    BigFloat abs_term = term;
    mpfr_abs(abs_term.get(), abs_term.get(), MPFR_RNDN);
    magnitude += abs_term;
  }
  return sum;
}

}  // namespace

double h_fractional(double z, std::vector<double> xs, double abs_tol) {
  if (!(abs_tol > 0)) throw std::invalid_argument("h_fractional: abs_tol must be positive");
  if (xs.size() < 3) throw Error(ErrorCode::WrongArity, "h_fractional needs at least 3 nodes");
  for (double x : xs) {
    if (!(x > 0)) throw Error(ErrorCode::NonPositiveNode, "h_z is defined here only for positive nodes");
  }
  require_distinct(xs);
  std::sort(xs.begin(), xs.end());

  const std::size_t k = xs.size();
  BigFloat prefactor(1.0);
  for (std::size_t j = 1; j < k; ++j) prefactor = prefactor * (BigFloat(z) + BigFloat(static_cast<double>(j)));
  prefactor = prefactor / BigFloat(Rational(factorial(k - 1)));

  std::vector<Rational> nodes;
  nodes.reserve(k);
  for (double x : xs) nodes.push_back(from_double(x));
  const HDensity<Rational> h = build_H(nodes);

  const BigFloat zf(z);
  BigFloat integral;
  BigFloat magnitude;
  for (std::size_t i = 0; i < h.size(); ++i) {
    integral += integrate_power_times_polynomial(h.pieces()[i], zf, h.breakpoints()[i], h.breakpoints()[i + 1],
                                                 magnitude);
  }
  BigFloat abs_prefactor = prefactor;
  mpfr_abs(abs_prefactor.get(), abs_prefactor.get(), MPFR_RNDN);
  const double rounding_bound = std::ldexp((magnitude * abs_prefactor).to_double(), -240);
  if (rounding_bound <= abs_tol) return (prefactor * integral).to_double();

  const HDensity<double> hd = build_H(xs);
  const double scale = std::max(1.0, std::abs(prefactor.to_double()));
  double total = 0;
  for (std::size_t i = 0; i < hd.size(); ++i) {
    const Polynomial<double>& piece = hd.pieces()[i];
    const auto r = integrate_adaptive([&](double t) { return std::pow(t, z) * piece(t); }, hd.breakpoints()[i],
                                      hd.breakpoints()[i + 1], abs_tol / (scale * static_cast<double>(hd.size())));
    if (!r.converged) throw Error(ErrorCode::ToleranceNotMet, "quadrature for h_z did not converge");
    total += r.value;
  }
  return prefactor.to_double() * total;
}

Rational schur_identity_residual(unsigned p, const std::vector<Rational>& xs, unsigned max_p) {
  if (p > max_p) throw std::invalid_argument("schur_identity_residual: p above the configured bound");
  const std::size_t k = xs.size();
  if (k < 2) throw Error(ErrorCode::WrongArity, "need at least 2 nodes");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (xs[i] == xs[j]) throw Error(ErrorCode::NodesNotDistinct, "repeated node");

  DenseMatrix<Rational> bordered(k, k);
  DenseMatrix<Rational> vandermonde(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational power = 1;
    for (std::size_t j = 0; j < k; ++j) {
      vandermonde(i, j) = power;
      if (j + 1 < k) bordered(i, j) = power;
      power *= xs[i];
    }
    bordered(i, k - 1) = numsg::pow(xs[i], static_cast<unsigned long>(p + k - 1));
  }
  return determinant(bordered) - h_complete(p, xs) * determinant(vandermonde);
}

double egf_residual(const std::vector<double>& xs, std::complex<double> z, unsigned truncation) {
  const std::size_t k = xs.size();
  if (k == 0) throw Error(ErrorCode::WrongArity, "need at least 1 node");
  for (double x : xs) {
    if (x == 0) throw Error(ErrorCode::ZeroNode, "nodes must be nonzero");
  }
  require_distinct(xs);

  std::vector<long double> xl(xs.begin(), xs.end());
  const std::vector<long double> h = h_complete_sequence<long double>(truncation, xl);
  const ComplexLD zz(z.real(), z.imag());

  // z^{k-1}/(k-1)!
  ComplexLD term(1.0L, 0.0L);
  for (std::size_t j = 1; j < k; ++j) term *= zz / static_cast<long double>(j);
  ComplexLD series(0.0L, 0.0L);
  for (unsigned p = 0; p <= truncation; ++p) {
    series += h[p] * term;
    term *= zz / static_cast<long double>(p + k);
  }

  ComplexLD closed(0.0L, 0.0L);
  for (std::size_t r = 0; r < k; ++r) {
    long double denom = 1.0L;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != r) denom *= xl[r] - xl[j];
    }
    closed += std::exp(xl[r] * zz) / denom;
  }
  return static_cast<double>(std::abs(series - closed));
}

std::complex<double> characteristic_fn_series(const std::vector<double>& xs, double z) {
  const std::size_t k = xs.size();
  long double max_abs = 0;
  for (double x : xs) max_abs = std::max<long double>(max_abs, std::abs(x));
  const auto terms = static_cast<unsigned>(std::min(2000.0L, 60.0L + 4.0L * max_abs * std::abs(z)));
  std::vector<long double> xl(xs.begin(), xs.end());
  const std::vector<long double> h = h_complete_sequence<long double>(terms, xl);

  // (k-1)!/(p+k-1)! * (iz)^p
  const ComplexLD iz(0.0L, z);
  ComplexLD factor(1.0L, 0.0L);
  ComplexLD sum(0.0L, 0.0L);
  for (unsigned p = 0; p <= terms; ++p) {
    sum += h[p] * factor;
    factor *= iz / static_cast<long double>(p + k);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::complex<double> characteristic_fn_closed(const std::vector<double>& xs, double z) {
  const std::size_t k = xs.size();
  std::vector<long double> xl(xs.begin(), xs.end());
  const ComplexLD iz(0.0L, z);
  ComplexLD iz_power(1.0L, 0.0L);
  long double fact = 1.0L;
  for (std::size_t j = 1; j < k; ++j) {
    iz_power *= iz;
    fact *= static_cast<long double>(j);
  }
  ComplexLD sum(0.0L, 0.0L);
  for (std::size_t r = 0; r < k; ++r) {
    long double denom = 1.0L;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != r) denom *= xl[r] - xl[j];
    }
    sum += std::exp(xl[r] * iz) / denom;
  }
  const ComplexLD value = fact * sum / iz_power;
  return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

std::complex<double> characteristic_fn(const std::vector<double>& xs, double z) {
  require_distinct(xs);
  double max_abs = 0;
  for (double x : xs) max_abs = std::max(max_abs, std::abs(x));
  if (std::abs(z) * max_abs <= kCharacteristicSeriesRadius) return characteristic_fn_series(xs, z);
  return characteristic_fn_closed(xs, z);
}

std::complex<double> characteristic_fn(const NumericalSemigroup& s, double z) {
  std::vector<double> xs;
  for (auto n : s.generators()) xs.push_back(1.0 / static_cast<double>(n));
  return characteristic_fn(xs, z);
}

}  // namespace numsg
