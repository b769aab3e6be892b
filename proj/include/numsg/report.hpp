#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numsg/density.hpp"
#include "numsg/exact_oracle.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// One statistic: exact-oracle value against the asymptotic prediction.
struct StatRow {
  std::string stat;   // "mean", "median", ...
  std::string item;   // which of the named statistics (a)..(j) it belongs to
  std::optional<double> actual;      // empty when unavailable (degraded run)
  std::vector<std::int64_t> actual_set;  // all modes, for the mode row
  double predicted = 0;
  std::optional<double> abs_dev;
  std::optional<double> rel_dev;
};

struct StatisticsReport {
  NumericalSemigroup semigroup;
  std::int64_t n = 0;
  bool degraded = false;  // full multiset over budget; moment-based rows only
  std::vector<StatRow> rows;

  const StatRow& row(const std::string& stat) const;

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_table(int decimals = 2) const;
};

/// Predicted values use only S and n. Actual values come from the full
/// length multiset when it fits `memory_budget`; otherwise, if
/// `allow_degrade`, from power sums alone (count, moment2, mean, variance,
/// stdev, skewness), with the other rows marked unavailable. Throws
/// Error(EmptyMultiset) if n is not in S and Error(BudgetExceeded) if over
/// budget without `allow_degrade`.
StatisticsReport compare_table(const NumericalSemigroup& s, std::int64_t n,
                               std::size_t memory_budget = kDefaultMemoryBudget, bool allow_degrade = true);

/// Predicted column alone.
StatisticsReport predicted_table(const NumericalSemigroup& s, std::int64_t n);

/// Rounds to `decimals` places, ties to even on the binary value.
std::string format_fixed(double value, int decimals);

struct HistogramData {
  std::int64_t n = 0;
  std::vector<std::pair<double, double>> points;   // (l/n, multiplicity * n / |L[n]|)
  std::vector<std::pair<double, double>> density;  // (x, F(x)) samples
};

/// Normalized histogram of L[n] (comparable to F on the same axes) plus
/// `samples + 1` uniform samples of F over [0, 1.05/n_1].
HistogramData hist_data(const NumericalSemigroup& s, std::int64_t n, std::size_t memory_budget = kDefaultMemoryBudget,
                        std::size_t samples = 400);

/// `samples + 1` rows "x,F(x)" over [0, 1.05/n_1].
std::vector<std::pair<double, double>> density_samples(const DensityF& d, double upper, std::size_t samples);

/// sup_x |empirical CDF - CDF of F| for the histogram points of L[n].
double kolmogorov_distance(const HistogramData& hist, const DensityF& d);

struct IdentitySummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t schur_checks = 0, schur_failures = 0;
  std::size_t egf_checks = 0, egf_failures = 0;
  double egf_max_residual = 0;
  std::size_t positivity_checks = 0, positivity_failures = 0;
  std::size_t moment_checks = 0, moment_failures = 0;

  bool passed() const {
    return schur_failures == 0 && egf_failures == 0 && positivity_failures == 0 && moment_failures == 0;
  }
  std::string to_json() const;
};

inline constexpr double kEgfResidualTolerance = 1e-10;

/// Seeded batch over random inputs: Schur/Vandermonde residual (exact zero),
/// EGF residual below kEgfResidualTolerance with 80 terms, h_{2d} >= 0 (two
/// inputs per trial), and C(p+k-1,p) * integral t^p H = h_p exactly.
/// Deterministic for a given seed.
IdentitySummary identity_suite(std::uint64_t seed, std::size_t trials);

}  // namespace numsg
