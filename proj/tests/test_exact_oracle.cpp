#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <map>

#include "numsg/error.hpp"
#include "numsg/exact_oracle.hpp"

using numsg::Integer;
using numsg::LengthAlgorithm;
using numsg::NumericalSemigroup;

namespace {

// Every factorization of n by plain recursion, tallied by length.
void brute_lengths(const std::vector<std::int64_t>& g, std::int64_t n, std::size_t i, std::int64_t len,
                   std::map<std::int64_t, Integer>& out) {
  if (i + 1 == g.size()) {
    if (n % g[i] == 0) out[len + n / g[i]] += 1;
    return;
  }
  for (std::int64_t m = 0; m * g[i] <= n; ++m) brute_lengths(g, n - m * g[i], i + 1, len + m, out);
}

std::map<std::int64_t, Integer> brute_lengths(const NumericalSemigroup& s, std::int64_t n) {
  std::map<std::int64_t, Integer> out;
  brute_lengths(s.generators(), n, 0, 0, out);
  return out;
}

const std::vector<std::vector<std::int64_t>> kSmall = {
    {3, 4, 5}, {6, 9, 20}, {5, 7, 11}, {9, 11, 13, 15, 17}, {11, 34, 35, 36}, {4, 6, 7, 9, 13, 15},
};

}  // namespace

TEST_CASE("length multiset of 12 in <3,4,5>") {
  const NumericalSemigroup s({3, 4, 5});
  const auto m = numsg::length_multiset(s, 12);
  CHECK(m.counts == std::map<std::int64_t, Integer>{{3, 2}, {4, 1}});
  CHECK(m.total() == 3);
  CHECK(m.power_sum(0) == 3);
  CHECK(m.power_sum(1) == 10);
  CHECK(m.power_sum(2) == 34);
  CHECK(m.to_csv() == "length,count\r\n3,2\r\n4,1\r\n");
  CHECK(nlohmann::json::parse(m.to_json()) == nlohmann::json::parse(R"({"n":12,"counts":{"3":"2","4":"1"}})"));
}

TEST_CASE("edge elements") {
  const NumericalSemigroup s({6, 9, 20});
  CHECK(numsg::length_multiset(s, 43).empty());
  const auto zero = numsg::length_multiset(s, 0);
  CHECK(zero.counts == std::map<std::int64_t, Integer>{{0, 1}});
  CHECK_THROWS_AS(numsg::empirical_stats(numsg::length_multiset(s, 43)), numsg::Error);
}

TEST_CASE("both algorithms agree with brute force") {
  for (const auto& gens : kSmall) {
    const NumericalSemigroup s(gens);
    for (std::int64_t n : {0, 1, 17, 60, 97, 144, 211}) {
      const auto expected = brute_lengths(s, n);
      CHECK(numsg::length_multiset(s, n, numsg::kDefaultMemoryBudget, LengthAlgorithm::knapsack).counts == expected);
      CHECK(numsg::length_multiset(s, n, numsg::kDefaultMemoryBudget, LengthAlgorithm::progression).counts ==
            expected);
      CHECK(numsg::length_multiset(s, n).counts == expected);
    }
  }
}

TEST_CASE("counts beyond 64 bits stay exact") {
  // Many small generators make the denumerant of a moderate n exceed 2^64.
  const NumericalSemigroup s({2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  const std::int64_t n = 4000;
  const auto knap = numsg::length_multiset(s, n, numsg::kDefaultMemoryBudget, LengthAlgorithm::knapsack);
  const auto sums = numsg::power_sums(s, n, 2);
  CHECK(knap.total() == sums.values[0]);
  CHECK(knap.power_sum(1) == sums.values[1]);
  CHECK(knap.power_sum(2) == sums.values[2]);
  CHECK(sums.values[0] > Integer("18446744073709551616"));
}

TEST_CASE("budget is enforced") {
  const NumericalSemigroup s({6, 9, 20});
  CHECK_THROWS_AS(numsg::length_multiset(s, 100000, 1024, LengthAlgorithm::knapsack), numsg::Error);
  try {
    numsg::length_multiset(s, 100000, 16, LengthAlgorithm::automatic);
    FAIL("expected BudgetExceeded");
  } catch (const numsg::Error& e) {
    CHECK(e.code() == numsg::ErrorCode::BudgetExceeded);
  }
  CHECK(numsg::knapsack_table_bytes(s, 60) == 61 * 11 * 8);
}

TEST_CASE("power sums equal multiset sums") {
  for (const auto& gens : kSmall) {
    const NumericalSemigroup s(gens);
    const auto table = numsg::power_sum_table(s, 150, 4);
    for (std::int64_t n = 0; n <= 150; n += 7) {
      const auto expected = brute_lengths(s, n);
      numsg::LengthMultiset m{n, expected};
      const auto sums = numsg::power_sums(s, n, 4);
      for (unsigned p = 0; p <= 4; ++p) {
        CHECK(sums.values[p] == m.power_sum(p));
        CHECK(table[n][p] == m.power_sum(p));
      }
    }
  }
}

TEST_CASE("lengths share the parity class of n when delta is 2") {
  const NumericalSemigroup s({9, 11, 13, 15, 17});
  for (std::int64_t n : {400, 401, 1000, 1001}) {
    const auto m = numsg::length_multiset(s, n);
    REQUIRE_FALSE(m.empty());
    const auto residue = m.min_length() % 2;
    for (const auto& [len, count] : m.counts) CHECK(len % 2 == residue);
  }
}

TEST_CASE("factorization enumeration") {
  const NumericalSemigroup s({3, 4, 5});
  const auto list = numsg::enumerate_factorizations(s, 12, 100);
  CHECK_FALSE(list.limit_exceeded);
  const std::vector<std::vector<std::int64_t>> expected = {{0, 3, 0}, {1, 1, 1}, {4, 0, 0}};
  CHECK(list.tuples == expected);
  CHECK(numsg::enumerate_factorizations(s, 12, 2).limit_exceeded);

  const NumericalSemigroup mc({6, 9, 20});
  const auto all = numsg::enumerate_factorizations(mc, 300, 100000);
  Integer total = 0;
  for (const auto& [len, c] : brute_lengths(mc, 300)) total += c;
  CHECK(Integer(static_cast<unsigned long>(all.tuples.size())) == total);
  for (const auto& t : all.tuples) CHECK(6 * t[0] + 9 * t[1] + 20 * t[2] == 300);
}

TEST_CASE("empirical and moment statistics") {
  numsg::LengthMultiset m{0, {{2, 1}, {3, 2}, {7, 1}}};
  const auto e = numsg::empirical_stats(m);
  CHECK(e.mean == doctest::Approx(15.0 / 4));
  CHECK(e.variance == doctest::Approx((4 + 9 + 9 + 49) / 4.0 - 225.0 / 16));
  CHECK(e.median == doctest::Approx(3));
  CHECK(e.modes == std::vector<std::int64_t>{3});
  CHECK(e.harmonic_mean == doctest::Approx(4.0 / (0.5 + 2.0 / 3 + 1.0 / 7)));
  CHECK(e.geometric_mean == doctest::Approx(std::pow(2.0 * 9 * 7, 0.25)));
  CHECK(e.min_length == 2);
  CHECK(e.max_length == 7);

  numsg::PowerSums sums{0, {m.power_sum(0), m.power_sum(1), m.power_sum(2), m.power_sum(3)}};
  const auto ms = numsg::moment_stats(sums);
  CHECK(ms.exact_mean == numsg::Rational(15, 4));
  CHECK(ms.mean == doctest::Approx(e.mean));
  CHECK(ms.stdev == doctest::Approx(e.stdev));
  CHECK(ms.skewness == doctest::Approx(e.skewness));

  numsg::LengthMultiset even{0, {{4, 1}, {6, 1}}};
  CHECK(numsg::empirical_stats(even).median == doctest::Approx(5));
  numsg::LengthMultiset flat{0, {{4, 3}}};
  CHECK(std::isnan(numsg::empirical_stats(flat).skewness));
}
