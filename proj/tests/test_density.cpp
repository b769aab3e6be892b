#include <doctest.h>

#include <cmath>
#include <random>

#include "numsg/density.hpp"
#include "numsg/error.hpp"

using numsg::NumericalSemigroup;
using numsg::Polynomial;
using numsg::Rational;

namespace {

// F straight from the absolute-value formula, one point at a time.
Rational direct_F(const NumericalSemigroup& s, const Rational& x) {
  const auto& g = s.generators();
  const std::size_t k = g.size();
  Rational total = 0;
  for (std::size_t r = 0; r < k; ++r) {
    const Rational u = 1 - g[r] * x;
    Rational term = abs(u) * numsg::pow(u, static_cast<unsigned>(k - 3));
    for (std::size_t j = 0; j < k; ++j) {
      if (j != r) term /= Rational(g[j] - g[r]);
    }
    total += term;
  }
  return total * Rational(s.generator_product() * static_cast<long>(k - 1)) / 2;
}

Polynomial<Rational> poly(std::vector<Rational> c) { return Polynomial<Rational>(std::move(c)); }

NumericalSemigroup random_semigroup(std::mt19937_64& rng, std::size_t k, std::int64_t max_gen) {
  std::uniform_int_distribution<std::int64_t> pick(2, max_gen);
  for (;;) {
    std::vector<std::int64_t> g;
    while (g.size() < k) {
      const auto v = pick(rng);
      if (std::find(g.begin(), g.end(), v) == g.end()) g.push_back(v);
    }
    try {
      return NumericalSemigroup(g);
    } catch (const numsg::Error&) {
    }
  }
}

}  // namespace

TEST_CASE("explicit pieces for <11,34,35,36>") {
  const NumericalSemigroup s({11, 34, 35, 36});
  const auto d = numsg::build_density(s);
  REQUIRE(d.pieces().size() == 3);
  CHECK(d.breakpoints() == std::vector<Rational>{Rational(1, 36), Rational(1, 35), Rational(1, 34), Rational(1, 11)});
  const Rational c(1413720);
  CHECK(d.pieces()[0] == poly({1, -72, 1296}) * Rational(c / 50));
  CHECK(d.pieces()[1] == poly({-13, 886, -15073}) * Rational(c / 600));
  CHECK(d.pieces()[2] == poly({1, -22, 121}) * Rational(c / 13800));
  CHECK(d.cdf_pieces()[2] == poly({-22, 1071, -11781, 43197}) * Rational(11, 115));
  CHECK(numsg::cdf(d, Rational(1, 11)) == 1);
  CHECK(numsg::cdf(d, Rational(1)) == 1);
  CHECK(numsg::cdf(d, Rational(0)) == 0);
}

TEST_CASE("triangular density of <6,9,20>") {
  const NumericalSemigroup s({6, 9, 20});
  const auto d = numsg::build_density(s);
  CHECK(numsg::eval_density(d, Rational(1, 9)) == Rational(120, 7));
  CHECK(numsg::eval_density(d, Rational(1, 20)) == 0);
  CHECK(numsg::eval_density(d, Rational(1, 6)) == 0);
  CHECK(numsg::eval_density(d, Rational(1, 2)) == 0);
  CHECK(numsg::mode_constant(d) == doctest::Approx(1.0 / 9));
  const auto cf = numsg::closed_form_stats(s);
  REQUIRE(cf.mean_slope);
  CHECK(*cf.mean_slope == (Rational(1, 6) + Rational(1, 9) + Rational(1, 20)) / 3);
  CHECK(*cf.variance_coeff == numsg::variance_closed_form(s));
  CHECK(*cf.mode_const == Rational(1, 9));
  CHECK(*cf.skewness_const == doctest::Approx(-0.0465924).epsilon(1e-6));
  CHECK(*cf.median_const == doctest::Approx(numsg::median_constant(d)).epsilon(1e-14));
}

TEST_CASE("density agrees with the direct formula") {
  std::mt19937_64 rng(11);
  for (std::size_t k = 3; k <= 7; ++k) {
    const auto s = random_semigroup(rng, k, 40);
    const auto d = numsg::build_density(s);
    const Rational lo(1, s.largest()), hi(1, s.smallest());
    for (int i = 0; i <= 40; ++i) {
      const Rational x = lo + (hi - lo) * i / 40 + Rational(1) / (997 * s.largest());
      CHECK(numsg::eval_density(d, x) == direct_F(s, x));
    }
  }
}

TEST_CASE("normalization, smoothness and moments") {
  std::mt19937_64 rng(23);
  for (std::size_t k = 3; k <= 8; ++k) {
    const auto s = random_semigroup(rng, k, 40);
    const auto d = numsg::build_density(s);
    CHECK(d.function().total() == 1);
    for (std::size_t b = 1; b + 1 < d.breakpoints().size(); ++b) {
      auto left = d.pieces()[b - 1];
      auto right = d.pieces()[b];
      for (std::size_t order = 0; order + 3 <= k; ++order) {
        CHECK(left(d.breakpoints()[b]) == right(d.breakpoints()[b]));
        left = left.derivative();
        right = right.derivative();
      }
    }
    for (unsigned p = 0; p <= 6; ++p) CHECK(numsg::asymptotic_moment(s, p) == numsg::expectation_power(d, p));
    const Rational m1 = numsg::expectation_power(d, 1);
    CHECK(numsg::variance_closed_form(s) == numsg::expectation_power(d, 2) - m1 * m1);
    CHECK(numsg::expectation(d, numsg::Integrand::power(3)) ==
          doctest::Approx(numsg::to_double(numsg::expectation_power(d, 3))).epsilon(1e-13));
    const double via_quadrature = numsg::expectation(d, numsg::Integrand::custom([](double t) { return 1 / t; }));
    CHECK(numsg::expectation(d, numsg::Integrand::reciprocal()) == doctest::Approx(via_quadrature).epsilon(1e-10));
    const double log_quad =
        numsg::expectation(d, numsg::Integrand::custom([](double t) { return std::log(t); }));
    CHECK(numsg::expectation(d, numsg::Integrand::log()) == doctest::Approx(log_quad).epsilon(1e-10));
    const double med = numsg::median_constant(d);
    CHECK(numsg::cdf(d, med) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("predicted constants for <11,34,35,36>") {
  const NumericalSemigroup s({11, 34, 35, 36});
  const auto st = numsg::predicted_stats(s);
  const double n = 1e5;
  CHECK(st.mode_const == doctest::Approx(886.0 / 30146).epsilon(1e-14));
  CHECK(st.median_const == doctest::Approx((1 - std::cbrt(115.0 / 714)) / 11).epsilon(1e-14));
  CHECK(std::round(st.median_const * n * 100) / 100 == doctest::Approx(4144.69));
  CHECK(std::round(numsg::to_double(st.mean_slope) * n * 100) / 100 == doctest::Approx(4416.76));
  CHECK(std::round(st.stdev_coeff * n * 100) / 100 == doctest::Approx(1207.14));
  CHECK(st.skewness_const == doctest::Approx(0.8594804).epsilon(1e-7));
  CHECK(st.min_slope == Rational(1, 36));
  CHECK(st.max_slope == Rational(1, 11));
  const auto cf = numsg::closed_form_stats(s);
  CHECK(*cf.mode_const == Rational(443, 15073));
  CHECK(*cf.skewness_const == doctest::Approx(st.skewness_const).epsilon(1e-12));
  CHECK(*cf.variance_coeff == st.variance_coeff);
}

TEST_CASE("Egyptian-fraction symmetry") {
  for (const auto& g : {std::vector<std::int64_t>{5, 6, 18, 45}, {3, 4, 8, 24}}) {
    const NumericalSemigroup s(g);
    CHECK(numsg::skew_symmetry_condition(s));
    CHECK(std::abs(numsg::predicted_stats(s).skewness_const) < 1e-12);
  }
  CHECK_FALSE(numsg::skew_symmetry_condition(NumericalSemigroup({11, 34, 35, 36})));
  CHECK_THROWS_AS(numsg::skew_symmetry_condition(NumericalSemigroup({6, 9, 20})), numsg::Error);
}

TEST_CASE("real roots") {
  // (x - 1/3)(x - 1/2)(x - 2)
  const auto p = poly({Rational(-1, 3), Rational(11, 6), Rational(-17, 6), 1});
  const auto roots = numsg::real_roots(p, 0, 3);
  REQUIRE(roots.size() == 3);
  CHECK(numsg::to_double(roots[0]) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(numsg::to_double(roots[1]) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(numsg::to_double(roots[2]) == doctest::Approx(2).epsilon(1e-15));
  CHECK(numsg::real_roots(poly({1, 0, 1}), -5, 5).empty());
}
