#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "numsg/rational.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// Multiset of factorization lengths of one element n: length -> number of
/// factorizations of n with that length. Counts are exact.
struct LengthMultiset {
  std::int64_t element = 0;
  std::map<std::int64_t, Integer> counts;

  bool empty() const { return counts.empty(); }
  Integer total() const;
  std::int64_t min_length() const { return counts.begin()->first; }
  std::int64_t max_length() const { return counts.rbegin()->first; }

  /// Lambda_p(n) = sum over the multiset of l^p.
  Integer power_sum(unsigned p) const;

  std::string to_csv() const;   // "length,count" header, counts as decimal strings
  std::string to_json() const;  // {"n": .., "counts": {"l": "count", ..}}
};

/// Lambda_0(n), ..., Lambda_P(n).
struct PowerSums {
  std::int64_t element = 0;
  std::vector<Integer> values;
};

struct FactorizationList {
  std::vector<std::vector<std::int64_t>> tuples;  // exponent vectors, lexicographic
  bool limit_exceeded = false;
};

/// Mean, variance (population), stdev and skewness from exact power sums.
struct MomentStats {
  double mean = 0;
  double variance = 0;
  double stdev = 0;
  double skewness = 0;  // NaN when the variance is zero
  Rational exact_mean;
  Rational exact_variance;
};

struct EmpiricalStats {
  double mean = 0;
  double variance = 0;
  double stdev = 0;
  double skewness = 0;  // NaN for a zero-variance multiset
  double median = 0;    // midpoint of the two central order statistics for even totals
  std::vector<std::int64_t> modes;
  double harmonic_mean = 0;   // 0 when length 0 occurs (only for n = 0)
  double geometric_mean = 0;  // likewise
  std::int64_t min_length = 0;
  std::int64_t max_length = 0;
};

enum class LengthAlgorithm {
  automatic,
  knapsack,     // table over (value, length), processed generator by generator
  progression,  // enumerate all but the two smallest generators, place the rest as arithmetic progressions
};

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

/// Upper limit on the number of outer tuples the progression sweep visits.
inline constexpr double kProgressionWorkLimit = 3e9;

/// Bytes the knapsack table for n would occupy: (n+1)(floor(n/n_1)+1) cells.
std::size_t knapsack_table_bytes(const NumericalSemigroup& s, std::int64_t n);

/// Rough count of outer tuples the progression sweep would visit.
double progression_work_estimate(const NumericalSemigroup& s, std::int64_t n);

/// Exact length multiset of n. Returns an empty multiset when n is not in S.
/// `automatic` runs whichever method is cheaper and fits; throws
/// Error(BudgetExceeded) when neither fits `memory_budget` (and, for the
/// sweep, kProgressionWorkLimit).
LengthMultiset length_multiset(const NumericalSemigroup& s, std::int64_t n,
                               std::size_t memory_budget = kDefaultMemoryBudget,
                               LengthAlgorithm algorithm = LengthAlgorithm::automatic);

/// Lambda_p(n) for p = 0..max_power, memory linear in n.
PowerSums power_sums(const NumericalSemigroup& s, std::int64_t n, unsigned max_power);

/// table[v][p] = Lambda_p(v) for every v in 0..n_max and p in 0..max_power.
std::vector<std::vector<Integer>> power_sum_table(const NumericalSemigroup& s, std::int64_t n_max,
                                                  unsigned max_power);

FactorizationList enumerate_factorizations(const NumericalSemigroup& s, std::int64_t n, std::size_t limit);

/// Throws Error(EmptyMultiset) if the multiset is empty.
EmpiricalStats empirical_stats(const LengthMultiset& m);

/// Needs at least Lambda_0..Lambda_3; throws Error(EmptyMultiset) if Lambda_0 = 0.
MomentStats moment_stats(const PowerSums& sums);

}  // namespace numsg
