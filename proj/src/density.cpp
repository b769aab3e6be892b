#include "numsg/density.hpp"

#include <algorithm>
#include <cmath>

#include "numsg/error.hpp"
#include "numsg/quadrature.hpp"
#include "numsg/symfun.hpp"

namespace numsg {

namespace {

int sign(const Rational& q) { return sgn(q); }

// Integral of p(t)/t over [lo, hi] with 0 < lo.
BigFloat integrate_over_t(const Polynomial<Rational>& p, const Rational& lo, const Rational& hi) {
  Rational rational_part = 0;
  for (std::size_t m = 1; m < p.coeffs().size(); ++m) {
    rational_part += p.coeffs()[m] * (numsg::pow(hi, m) - numsg::pow(lo, m)) / Rational(static_cast<long>(m));
  }
  const Rational ratio = hi / lo;
  return BigFloat(rational_part) + BigFloat(p.coeff(0)) * log(BigFloat(ratio));
}

// Integral of p(t) ln t over [lo, hi]; uses
//   integral of t^m ln t = t^{m+1} (ln t/(m+1) - 1/(m+1)^2).
BigFloat integrate_times_log(const Polynomial<Rational>& p, const Rational& lo, const Rational& hi) {
  const BigFloat log_lo = log(BigFloat(lo));
  const BigFloat log_hi = log(BigFloat(hi));
  Rational rational_part = 0;
  BigFloat log_part;
  for (std::size_t m = 0; m < p.coeffs().size(); ++m) {
    const Rational& c = p.coeffs()[m];
    if (c == 0) continue;
    const Rational e(static_cast<long>(m + 1));
    const Rational hi_pow = numsg::pow(hi, m + 1);
    const Rational lo_pow = numsg::pow(lo, m + 1);
    rational_part -= c * (hi_pow - lo_pow) / (e * e);
    log_part += BigFloat(Rational(c / e)) * (BigFloat(hi_pow) * log_hi - BigFloat(lo_pow) * log_lo);
  }
  return BigFloat(rational_part) + log_part;
}

Rational bisect_root(const Polynomial<Rational>& p, Rational lo, Rational hi) {
  const int sign_lo = sign(p(lo));
  // ~2^-80 of the bracket; far below double resolution.
  for (int iter = 0; iter < 80; ++iter) {
    Rational mid = (lo + hi) / 2;
    const int s = sign(p(mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return (lo + hi) / 2;
}

}  // namespace

// ---------------------------------------------------------------------------

DensityF build_density(const NumericalSemigroup& s) {
  const auto& g = s.generators();
  const std::size_t k = g.size();
  const Rational scale = Rational(Integer(s.generator_product() * static_cast<long>(k - 1))) / 2;

  // term_r(x) = (1 - n_r x)^{k-2} / prod_{j != r}(n_j - n_r)
  std::vector<Polynomial<Rational>> terms(k);
  for (std::size_t r = 0; r < k; ++r) {
    Integer denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != r) denom *= static_cast<long>(g[j] - g[r]);
    }
    terms[r] = Polynomial<Rational>::linear(Rational(1), Rational(-g[r])).pow(static_cast<unsigned>(k - 2)) *
               Rational(Rational(1) / Rational(denom));
  }

  std::vector<Rational> breakpoints;
  for (std::size_t i = k; i-- > 0;) breakpoints.emplace_back(1, static_cast<unsigned long>(g[i]));

  std::vector<Polynomial<Rational>> pieces;
  for (std::size_t q = 0; q + 1 < k; ++q) {
    // Piece between 1/g[k-1-q] and 1/g[k-2-q]: 1 - n_r x > 0 iff r <= k-2-q.
    Polynomial<Rational> piece;
    for (std::size_t r = 0; r < k; ++r) {
      if (r + q <= k - 2) {
        piece += terms[r];
      } else {
        piece -= terms[r];
      }
    }
    pieces.push_back(piece * scale);
  }
  return DensityF(k, PiecewisePolynomial<Rational>(std::move(breakpoints), std::move(pieces)));
}

Rational eval_density(const DensityF& d, const Rational& x) { return d.function()(x); }

double eval_density(const DensityF& d, double x) {
  if (!std::isfinite(x)) return 0.0;
  return to_double(eval_density(d, from_double(x)));
}

Rational cdf(const DensityF& d, const Rational& x) {
  Rational c = d.function().cumulative(x);
  if (c < 0) return 0;
  if (c > 1) return 1;
  return c;
}

double cdf(const DensityF& d, double x) {
  if (std::isnan(x)) return 0.0;
  if (x == INFINITY) return 1.0;
  if (x == -INFINITY) return 0.0;
  return to_double(cdf(d, from_double(x)));
}

Rational asymptotic_moment(const NumericalSemigroup& s, unsigned p) {
  const std::vector<Rational> xs = s.reciprocals();
  return h_complete(p, xs) / Rational(binomial(p + s.rank() - 1, p));
}

Rational expectation_power(const DensityF& d, unsigned p) { return d.function().moment(p); }

double expectation(const DensityF& d, const Integrand& g, double abs_tol) {
  const auto& b = d.breakpoints();
  switch (g.kind) {
    case Integrand::Kind::power:
      return to_double(expectation_power(d, g.exponent));
    case Integrand::Kind::reciprocal: {
      BigFloat sum;
      for (std::size_t i = 0; i < d.pieces().size(); ++i) sum += integrate_over_t(d.pieces()[i], b[i], b[i + 1]);
      return sum.to_double();
    }
    case Integrand::Kind::log: {
      BigFloat sum;
      for (std::size_t i = 0; i < d.pieces().size(); ++i) sum += integrate_times_log(d.pieces()[i], b[i], b[i + 1]);
      return sum.to_double();
    }
    case Integrand::Kind::custom:
      break;
  }
  if (!g.function) throw std::invalid_argument("expectation: custom integrand without a function");
  double total = 0;
  const double panel_tol = abs_tol / static_cast<double>(d.pieces().size());
  for (std::size_t i = 0; i < d.pieces().size(); ++i) {
    const Polynomial<Rational>& piece = d.pieces()[i];
    const auto f = [&](double t) { return g.function(t) * to_double(piece(from_double(t))); };
    const QuadratureResult r = integrate_adaptive(f, to_double(b[i]), to_double(b[i + 1]), panel_tol);
    if (!r.converged) throw Error(ErrorCode::ToleranceNotMet, "expectation quadrature did not converge");
    total += r.value;
  }
  return total;
}

// ---------------------------------------------------------------------------

std::vector<Rational> real_roots(const Polynomial<Rational>& p, const Rational& lo, const Rational& hi) {
  std::vector<Rational> roots;
  if (p.degree() <= 0 || hi < lo) return roots;
  if (p.degree() == 1) {
    Rational r = -p.coeff(0) / p.coeff(1);
    if (r >= lo && r <= hi) roots.push_back(std::move(r));
    return roots;
  }
  // Between consecutive critical points p is monotone, so each such segment
  // holds at most one root.
  std::vector<Rational> points{lo};
  for (auto& c : real_roots(p.derivative(), lo, hi)) points.push_back(std::move(c));
  points.push_back(hi);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const int s0 = sign(p(points[i]));
    const int s1 = sign(p(points[i + 1]));
    if (s0 == 0) {
      roots.push_back(points[i]);
    } else if (s1 != 0 && s0 != s1) {
      roots.push_back(bisect_root(p, points[i], points[i + 1]));
    }
  }
  if (sign(p(points.back())) == 0) roots.push_back(points.back());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

double median_constant(const DensityF& d) {
  const Rational half(1, 2);
  const auto& b = d.breakpoints();
  for (std::size_t i = 0; i < d.pieces().size(); ++i) {
    const Rational at_hi = d.function().cumulative(b[i + 1]);
    if (at_hi < half) continue;
    if (at_hi == half) return to_double(b[i + 1]);
    const Polynomial<Rational> shifted = d.cdf_pieces()[i] - Polynomial<Rational>::constant(half);
    return to_double(bisect_root(shifted, b[i], b[i + 1]));
  }
  return to_double(b.back());
}

double mode_constant(const DensityF& d) {
  const auto& b = d.breakpoints();
  Rational best_x = b.front();
  Rational best_value = -1;
  for (std::size_t i = 0; i < d.pieces().size(); ++i) {
    const Polynomial<Rational>& piece = d.pieces()[i];
    std::vector<Rational> candidates = real_roots(piece.derivative(), b[i], b[i + 1]);
    candidates.push_back(b[i]);
    candidates.push_back(b[i + 1]);
    std::sort(candidates.begin(), candidates.end());
    for (const auto& x : candidates) {
      const Rational v = piece(x);
      if (v > best_value || (v == best_value && x < best_x)) {
        best_value = v;
        best_x = x;
      }
    }
  }
  return to_double(best_x);
}

Rational variance_closed_form(const NumericalSemigroup& s) {
  const std::vector<Rational> x = s.reciprocals();
  const long k = static_cast<long>(x.size());
  Rational squares = 0;
  Rational pairs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    squares += x[i] * x[i];
    for (std::size_t j = i + 1; j < x.size(); ++j) pairs += x[i] * x[j];
  }
  return ((k - 1) * squares - 2 * pairs) / Rational(k * k * (k + 1));
}

AsymptoticStats predicted_stats(const NumericalSemigroup& s) {
  const DensityF d = build_density(s);
  const std::size_t k = s.rank();
  AsymptoticStats out;
  out.count_coeff = Rational(1) / Rational(Integer(factorial(k - 1) * s.generator_product()));
  const Rational m1 = asymptotic_moment(s, 1);
  const Rational m2 = asymptotic_moment(s, 2);
  const Rational m3 = asymptotic_moment(s, 3);
  out.mean_slope = m1;
  out.variance_coeff = m2 - m1 * m1;
  const BigFloat sigma = sqrt(BigFloat(out.variance_coeff));
  out.stdev_coeff = sigma.to_double();
  const Rational third = m3 - 3 * m1 * out.variance_coeff - m1 * m1 * m1;
  out.skewness_const = (BigFloat(third) / (sigma * sigma * sigma)).to_double();
  out.median_const = median_constant(d);
  out.mode_const = mode_constant(d);
  out.harmonic_const = 1.0 / expectation(d, Integrand::reciprocal());
  out.geometric_log_const = expectation(d, Integrand::log());
  out.min_slope = Rational(1, static_cast<unsigned long>(s.largest()));
  out.max_slope = Rational(1, static_cast<unsigned long>(s.smallest()));
  return out;
}

ClosedFormStats closed_form_stats(const NumericalSemigroup& s) {
  ClosedFormStats out;
  const auto& g = s.generators();
  const std::vector<Rational> x = s.reciprocals();
  if (s.rank() == 3) {
    // Triangular density on [1/n_3, 1/n_1] with peak at 1/n_2.
    const Rational& a = x[0];
    const Rational& b = x[1];
    const Rational& c = x[2];
    out.mean_slope = (a + b + c) / 3;
    const Rational spread = a * a + b * b + c * c - a * b - b * c - c * a;
    out.variance_coeff = spread / 18;
    out.mode_const = b;
    if (b >= (a + c) / 2) {
      out.median_const = (BigFloat(c) + sqrt(BigFloat(Rational((a - c) * (b - c) / 2)))).to_double();
    } else {
      out.median_const = (BigFloat(a) - sqrt(BigFloat(Rational((a - c) * (a - b) / 2)))).to_double();
    }
    const Rational product = (a + c - 2 * b) * (2 * a - c - b) * (a - 2 * c + b);
    const BigFloat root_spread = sqrt(BigFloat(spread));
    out.skewness_const = (sqrt(BigFloat(2.0)) * BigFloat(product) /
                          (BigFloat(5.0) * root_spread * root_spread * root_spread))
                             .to_double();
  } else if (s.rank() == 4) {
    const Rational& a = x[0];
    const Rational& b = x[1];
    const Rational& c = x[2];
    const Rational& d = x[3];
    out.mean_slope = (a + b + c + d) / 4;
    out.variance_coeff = variance_closed_form(s);
    const Integer n1(static_cast<long>(g[0])), n2(static_cast<long>(g[1])), n3(static_cast<long>(g[2])),
        n4(static_cast<long>(g[3]));
    out.mode_const = Rational(Integer(n1 * n2 - n3 * n4),
                              Integer(n1 * n2 * n3 + n1 * n2 * n4 - n1 * n3 * n4 - n2 * n3 * n4));
    out.mode_const->canonicalize();
    const Rational squares = a * a + b * b + c * c + d * d;
    const Rational pairs = a * b + a * c + b * c + a * d + b * d + c * d;
    const Rational product = (a + b - c - d) * (a - b + c - d) * (a - b - c + d);
    const BigFloat root = sqrt(BigFloat(Rational(3 * squares - 2 * pairs)));
    out.skewness_const =
        (BigFloat(2.0) * sqrt(BigFloat(5.0)) * BigFloat(product) / (root * root * root)).to_double();
  }
  return out;
}

bool skew_symmetry_condition(const NumericalSemigroup& s) {
  if (s.rank() != 4) throw Error(ErrorCode::WrongArity, "the Egyptian-fraction test needs exactly 4 generators");
  const std::vector<Rational> x = s.reciprocals();
  return x[0] + x[2] == x[1] + x[3] || x[0] + x[3] == x[1] + x[2];
}

}  // namespace numsg
