// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "numsg/density.hpp"
#include "numsg/error.hpp"
#include "numsg/exact_oracle.hpp"
#include "numsg/quasipoly.hpp"
#include "numsg/report.hpp"
#include "numsg/symfun.hpp"

using namespace numsg;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
  void expect_text(const std::string& got, const std::string& want, const std::string& what) {
    expect(got == want, what + ": got " + got + ", want " + want);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

NumericalSemigroup random_semigroup(std::mt19937_64& rng, std::size_t k, std::int64_t max_gen) {
  for (;;) {
    std::vector<std::int64_t> g;
    while (g.size() < k) {
      const auto v = static_cast<std::int64_t>(draw(rng, 2, max_gen));
      if (std::find(g.begin(), g.end(), v) == g.end()) g.push_back(v);
    }
    try {
      return NumericalSemigroup(g);
    } catch (const Error&) {
    }
  }
}

double max_rel_dev(const StatisticsReport& r) {
  double worst = 0;
  for (const auto& row : r.rows) {
    if (row.rel_dev) worst = std::max(worst, *row.rel_dev);
  }
  return worst;
}

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = compare_table(NumericalSemigroup({6, 9, 20}), 100000);
  const double elapsed = seconds_since(t0);
  const auto two = [&](const char* stat, bool actual) {
    const auto& row = r.row(stat);
    return format_fixed(actual ? row.actual.value_or(NAN) : row.predicted, 2);
  };
  o.expect(!r.degraded, "full multiset");
  o.expect_text(two("mean", true), "10925.14", "mean actual");
  o.expect_text(two("median", true), "10970.00", "median actual");
  o.expect(r.row("mode").actual_set == std::vector<std::int64_t>{11109, 11110, 11111}, "modes");
  o.expect_text(two("stdev", true), "2382.40", "stdev actual");
  o.expect_text(two("harmonic_mean", true), "10359.00", "harmonic actual");
  o.expect_text(two("geometric_mean", true), "10650.22", "geometric actual");
  o.expect_text(format_fixed(r.row("skewness").actual.value_or(NAN), 6), "-0.046593", "skew actual");
  o.expect_text(two("min", true), "5000.00", "min actual");
  o.expect_text(two("max", true), "16662.00", "max actual");
  o.expect_text(two("mean", false), "10925.93", "mean predicted");
  o.expect_text(two("median", false), "10970.61", "median predicted");
  o.expect_text(two("mode", false), "11111.11", "mode predicted");
  o.expect_text(two("stdev", false), "2382.35", "stdev predicted");
  o.expect_text(two("harmonic_mean", false), "10359.86", "harmonic predicted");
  o.expect_text(two("geometric_mean", false), "10651.03", "geometric predicted");
  o.expect_text(format_fixed(r.row("skewness").predicted, 6), "-0.046592", "skew predicted");
  o.expect_text(two("min", false), "5000.00", "min predicted");
  o.expect_text(two("max", false), "16666.67", "max predicted");
  o.expect(elapsed < 60, "runtime " + std::to_string(elapsed) + " s");
  o.detail << " runtime " << format_fixed(elapsed, 2) << " s";
}

void criterion2(Outcome& o) {
  const NumericalSemigroup s({11, 34, 35, 36});
  const auto r = predicted_table(s, 100000);
  const auto two = [&](const char* stat) { return format_fixed(r.row(stat).predicted, 2); };
  o.expect_text(two("mean"), "4416.76", "mean");
  o.expect_text(two("median"), "4144.69", "median");
  o.expect_text(two("mode"), "2939.03", "mode");
  o.expect_text(two("stdev"), "1207.14", "stdev");
  o.expect_text(format_fixed(r.row("skewness").predicted, 7), "0.8594804", "skew");
  o.expect_text(two("min"), "2777.78", "min");
  o.expect_text(two("max"), "9090.91", "max");
  const double median_closed = 1e5 * (1 - std::cbrt(115.0 / 714)) / 11;
  o.expect(std::abs(r.row("median").predicted - median_closed) < 1e-8, "median closed form");
  const auto d = build_density(s);
  const Polynomial<Rational> cdf_piece(std::vector<Rational>{-22, 1071, -11781, 43197});
  o.expect(d.cdf_pieces().size() == 3 && d.cdf_pieces()[2] == cdf_piece * Rational(11, 115), "CDF piece");
}

void criterion3(Outcome& o) {
  for (const auto& gens : {std::vector<std::int64_t>{11, 34, 35, 36}, {9, 11, 13, 15, 17}}) {
    const NumericalSemigroup s(gens);
    const auto r1 = compare_table(s, 10000, kDefaultMemoryBudget, false);
    const auto r2 = compare_table(s, 20000, kDefaultMemoryBudget, false);
    const double w1 = max_rel_dev(r1), w2 = max_rel_dev(r2);
    o.expect(w1 <= 0.03, s.to_string() + " max rel dev " + std::to_string(w1));
    o.expect(w2 <= w1, s.to_string() + " deviation grew");
    o.detail << ' ' << s.to_string() << " max rel dev " << format_fixed(100 * w1, 3) << "% -> "
             << format_fixed(100 * w2, 3) << "%";
  }
  const auto check = [&](const NumericalSemigroup& s, const char* mean, const char* stdev, const char* skew,
                         int skew_decimals) {
    const auto m = moment_stats(power_sums(s, 100000, 3));
    o.expect_text(format_fixed(m.mean, 2), mean, s.to_string() + " mean");
    o.expect_text(format_fixed(m.stdev, 2), stdev, s.to_string() + " stdev");
    o.expect_text(format_fixed(m.skewness, skew_decimals), skew, s.to_string() + " skew");
  };
  check(NumericalSemigroup({11, 34, 35, 36}), "4417.31", "1207.84", "0.8594802", 7);
  check(NumericalSemigroup({9, 11, 13, 15, 17}), "8088.80", "757.14", "0.32812710", 8);
}

void criterion4(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto m = moment_stats(power_sums(NumericalSemigroup({118, 150, 162, 175, 182, 258, 373, 387, 456}), 100000, 3));
  const double elapsed = seconds_since(t0);
  o.expect_text(format_fixed(m.mean, 2), "488.30", "mean");
  o.expect_text(format_fixed(m.stdev, 2), "65.01", "stdev");
  o.expect_text(format_fixed(m.skewness, 5), "0.09692", "skew");
  o.expect(elapsed < 300, "runtime");
  o.detail << " runtime " << format_fixed(elapsed, 2) << " s";
}

void criterion5(Outcome& o) {
  const NumericalSemigroup s({3, 4, 5});
  std::size_t checks = 0;
  for (unsigned p = 0; p <= 2; ++p) {
    const auto q = fit_quasipolynomial(s, p);
    const auto v = verify_quasipolynomial(s, p, q, 5);
    checks += v.checks;
    o.expect(q.period == 60, "period");
    o.expect(v.checks == 300, "p=" + std::to_string(p) + " check count");
    o.expect(v.mismatches == 0, "p=" + std::to_string(p) + " mismatch at n=" + std::to_string(v.first_mismatch));
    o.expect(v.leading_coefficients_match, "p=" + std::to_string(p) + " leading coefficient");
  }
  o.detail << ' ' << checks << " held-out equalities";
}

void criterion6(Outcome& o) {
  std::mt19937_64 rng(6);
  std::size_t checks = 0;
  for (int i = 0; i < 20; ++i) {
    const auto s = random_semigroup(rng, draw(rng, 3, 6), 40);
    const auto d = build_density(s);
    for (unsigned p = 0; p <= 6; ++p, ++checks) {
      o.expect(asymptotic_moment(s, p) == expectation_power(d, p), s.to_string() + " p=" + std::to_string(p));
    }
  }
  o.detail << ' ' << checks << " exact equalities";
}

void criterion7(Outcome& o) {
  std::mt19937_64 rng(7);
  for (std::size_t k = 3; k <= 8; ++k) {
    const auto s = random_semigroup(rng, k, 60);
    const auto d = build_density(s);
    o.expect(d.function().total() == 1, s.to_string() + " integral");
    for (std::size_t b = 1; b + 1 < d.breakpoints().size(); ++b) {
      auto left = d.pieces()[b - 1];
      auto right = d.pieces()[b];
      for (std::size_t order = 0; order + 3 <= k; ++order) {
        o.expect(left(d.breakpoints()[b]) == right(d.breakpoints()[b]),
                 s.to_string() + " derivative " + std::to_string(order));
        left = left.derivative();
        right = right.derivative();
      }
    }
  }
}

void criterion8(Outcome& o) {
  const auto r = identity_suite(8, 100);
  o.expect(r.schur_checks == 100 && r.schur_failures == 0, "schur");
  o.expect(r.egf_checks == 100 && r.egf_failures == 0, "egf");
  o.expect(r.positivity_checks == 200 && r.positivity_failures == 0, "positivity");
  o.expect(r.moment_checks == 100 && r.moment_failures == 0, "H moments");
  o.detail << " egf max residual " << r.egf_max_residual;
}

void criterion9(Outcome& o) {
  const std::vector<double> a = {1, 2, 4};
  const std::vector<double> b = {0.5, 1.25, 3, 7};
  for (const auto& xs : {a, b}) {
    o.expect(std::abs(h_fractional(-1, xs)) < 1e-10, "h_-1");
    o.expect(std::abs(h_fractional(-2, xs)) < 1e-10, "h_-2");
    std::vector<Rational> xr;
    for (double x : xs) xr.push_back(from_double(x));
    for (unsigned z = 0; z <= 3; ++z) {
      o.expect(std::abs(h_fractional(z, xs) - to_double(h_complete(z, xr))) < 1e-10, "h_" + std::to_string(z));
    }
  }
  o.expect(std::abs(h_fractional(-3, a) - 0.125) < 1e-10, "h_-3(1,2,4)");
  o.expect(std::abs(h_fractional(-0.5, {1, 4, 9}) - 11.0 / 60) < 1e-8, "h_-1/2(1,4,9)");
}

void criterion10(Outcome& o) {
  const NumericalSemigroup s({9, 11, 13, 15, 17});
  for (std::int64_t n : {10000, 10001}) {
    const auto m = length_multiset(s, n);
    o.expect(!m.empty(), "n=" + std::to_string(n) + " in S");
    for (const auto& [len, count] : m.counts) {
      if ((len - n) % s.delta() != 0) {
        o.expect(false, "length " + std::to_string(len) + " of n=" + std::to_string(n));
        break;
      }
    }
  }
  const auto d = build_density(s);
  const double ks1 = kolmogorov_distance(hist_data(s, 10000), d);
  const double ks2 = kolmogorov_distance(hist_data(s, 20000), d);
  o.expect(ks1 < 0.03, "distance at 1e4");
  o.expect(ks2 < ks1, "distance did not shrink");
  o.detail << " Kolmogorov " << ks1 << " -> " << ks2;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"Table 1 actual and predicted, <6,9,20> at 1e5", criterion1},
      {"Table 2 predicted column and CDF piece, <11,34,35,36>", criterion2},
      {"k=4,5 actual vs predicted within 3%, shrinking; moments at 1e5", criterion3},
      {"Table 4 moment statistics from power sums", criterion4},
      {"quasipolynomial fit of <3,4,5>, p=0..2, held-out equality", criterion5},
      {"asymptotic moments equal density moments, p<=6", criterion6},
      {"density normalization and breakpoint smoothness, k=3..8", criterion7},
      {"symmetric-function identity suite", criterion8},
      {"fractional complete homogeneous h_z", criterion9},
      {"delta congruence and histogram convergence, <9,11,13,15,17>", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " exception: " << e.what();
    }
    if (!o.ok) ++failures;
    std::printf("%s  %2zu  %s:%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
