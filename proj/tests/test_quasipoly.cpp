#include <doctest.h>

#include <json.hpp>

#include "numsg/error.hpp"
#include "numsg/exact_oracle.hpp"
#include "numsg/quasipoly.hpp"

using numsg::NumericalSemigroup;
using numsg::Rational;

TEST_CASE("leading coefficients") {
  CHECK(numsg::leading_coefficient(NumericalSemigroup({6, 9, 20}), 0) == Rational(1, 2160));
  CHECK(numsg::leading_coefficient(NumericalSemigroup({3, 4, 5}), 1) == Rational(47, 21600));
}

TEST_CASE("fit and verify for <3,4,5>") {
  const NumericalSemigroup s({3, 4, 5});
  for (unsigned p = 0; p <= 2; ++p) {
    const auto q = numsg::fit_quasipolynomial(s, p);
    CHECK(q.period == 60);
    CHECK(q.degree == static_cast<int>(p) + 2);
    REQUIRE(q.rows.size() == 60);
    for (int d : numsg::observed_degrees(q)) CHECK(d == q.degree);

    // Fitting never samples below L, so small n are out-of-sample too.
    const auto table = numsg::power_sum_table(s, 947, p);
    for (std::int64_t n = 0; n <= 947; ++n) CHECK(numsg::eval_quasipolynomial(q, n) == Rational(table[n][p]));

    const auto v = numsg::verify_quasipolynomial(s, p, q, 5);
    CHECK(v.checks == 300);
    CHECK(v.mismatches == 0);
    CHECK(v.leading_coefficients_match);
  }
  CHECK(numsg::eval_quasipolynomial(numsg::fit_quasipolynomial(s, 2), 12) == 34);
}

TEST_CASE("json shape and period detection") {
  const NumericalSemigroup s({3, 4, 5});
  const auto q = numsg::fit_quasipolynomial(s, 0);
  const auto j = nlohmann::json::parse(q.to_json());
  CHECK(j["period"] == 60);
  CHECK(j["degree"] == 2);
  CHECK(j["rows"].size() == 60);
  CHECK(j["rows"]["0"].size() == 3);
  CHECK(60 % numsg::observed_period(q) == 0);

  // Shifting a row breaks periodicity at every proper divisor.
  auto broken = q;
  broken.rows[7][0] += 1;
  CHECK(numsg::observed_period(broken) == 60);
}

TEST_CASE("evaluation budget") {
  const NumericalSemigroup s({6, 9, 20});
  try {
    numsg::fit_quasipolynomial(s, 0, 100);
    FAIL("expected BudgetExceeded");
  } catch (const numsg::Error& e) {
    CHECK(e.code() == numsg::ErrorCode::BudgetExceeded);
  }
}
