#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "numsg/piecewise.hpp"
#include "numsg/rational.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// Limiting density F of normalized factorization lengths l/n, stored as an
/// exact piecewise polynomial of degree k-2 on the breakpoints
/// 1/n_k < ... < 1/n_1, with exact CDF pieces.
class DensityF {
 public:
  DensityF(std::size_t rank, PiecewisePolynomial<Rational> function)
      : rank_(rank), function_(std::move(function)) {}

  std::size_t rank() const { return rank_; }
  const std::vector<Rational>& breakpoints() const { return function_.breakpoints(); }
  const std::vector<Polynomial<Rational>>& pieces() const { return function_.pieces(); }
  const std::vector<Polynomial<Rational>>& cdf_pieces() const { return function_.cumulative_pieces(); }
  const PiecewisePolynomial<Rational>& function() const { return function_; }

 private:
  std::size_t rank_;
  PiecewisePolynomial<Rational> function_;
};

/// F(x) = ((k-1) n_1...n_k / 2) sum_r |1 - n_r x| (1 - n_r x)^{k-3} / prod_{j != r}(n_j - n_r).
/// Between 1/n_{i+1} and 1/n_i the factor 1 - n_r x is positive exactly for
/// r <= i, which fixes every absolute value on that piece.
DensityF build_density(const NumericalSemigroup& s);

Rational eval_density(const DensityF& d, const Rational& x);
double eval_density(const DensityF& d, double x);

/// Integral of F up to x, clamped to [0, 1].
Rational cdf(const DensityF& d, const Rational& x);
double cdf(const DensityF& d, double x);

/// C(p+k-1, p)^{-1} h_p(1/n_1, ..., 1/n_k).
Rational asymptotic_moment(const NumericalSemigroup& s, unsigned p);

/// Integrand g for expectation(). The power, reciprocal and log members are
/// integrated in closed form piece by piece; custom functions use adaptive
/// quadrature on each piece separately.
struct Integrand {
  enum class Kind { power, reciprocal, log, custom };
  Kind kind = Kind::power;
  unsigned exponent = 0;
  std::function<double(double)> function;

  static Integrand power(unsigned p) { return {Kind::power, p, {}}; }
  static Integrand reciprocal() { return {Kind::reciprocal, 0, {}}; }
  static Integrand log() { return {Kind::log, 0, {}}; }
  static Integrand custom(std::function<double(double)> g) { return {Kind::custom, 0, std::move(g)}; }
};

/// Integral of g(t) F(t) dt. Throws Error(ToleranceNotMet) if quadrature for
/// a custom g does not reach abs_tol.
double expectation(const DensityF& d, const Integrand& g, double abs_tol = 1e-12);

/// Integral of t^p F(t) dt as an exact rational.
Rational expectation_power(const DensityF& d, unsigned p);

struct AsymptoticStats {
  Rational count_coeff;     // |L[n]| ~ count_coeff * n^{k-1}
  Rational mean_slope;      // (1/k) sum 1/n_i
  Rational variance_coeff;  // m_2 - m_1^2 of F
  double stdev_coeff = 0;
  double skewness_const = 0;
  double median_const = 0;  // CDF(beta) = 1/2
  double mode_const = 0;    // argmax F, smallest maximizer
  double harmonic_const = 0;
  double geometric_log_const = 0;
  Rational min_slope;  // 1/n_k
  Rational max_slope;  // 1/n_1
};

AsymptoticStats predicted_stats(const NumericalSemigroup& s);

/// Variance constant via ((k-1) sum 1/n_i^2 - 2 sum_{i<j} 1/(n_i n_j)) / (k^2 (k+1)).
Rational variance_closed_form(const NumericalSemigroup& s);

/// Closed forms available for three and four generators (triangular and
/// piecewise-quadratic densities). Fields are empty where no closed form
/// exists for that rank.
struct ClosedFormStats {
  std::optional<Rational> mean_slope;
  std::optional<Rational> variance_coeff;
  std::optional<Rational> mode_const;
  std::optional<double> median_const;
  std::optional<double> skewness_const;
};

ClosedFormStats closed_form_stats(const NumericalSemigroup& s);

/// Median constant: the unique beta with CDF(beta) = 1/2, located by exact
/// sign bracketing on breakpoints and exact bisection inside the piece.
double median_constant(const DensityF& d);

/// argmax F over every piece's stationary points and the breakpoints.
double mode_constant(const DensityF& d);

/// Real roots of p in [lo, hi], exact for degree 1 and otherwise bracketed
/// to about 2^-80 relative width by exact bisection between the critical points.
std::vector<Rational> real_roots(const Polynomial<Rational>& p, const Rational& lo, const Rational& hi);

/// For k = 4: 1/n_1 + 1/n_3 = 1/n_2 + 1/n_4 or 1/n_1 + 1/n_4 = 1/n_2 + 1/n_3.
/// Throws Error(WrongArity) otherwise.
bool skew_symmetry_condition(const NumericalSemigroup& s);

}  // namespace numsg
