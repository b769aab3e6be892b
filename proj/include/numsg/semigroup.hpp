#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/rational.hpp"

namespace numsg {

/// A numerical semigroup <n_1, ..., n_k> given by k >= 3 distinct generators
/// with gcd 1. The generators need not be a minimal generating set.
/// Immutable after construction.
class NumericalSemigroup {
 public:
  /// Sorts and deduplicates. Throws Error with NonPositive, TooFewGenerators
  /// (fewer than 3 distinct values) or GcdNotOne.
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  /// Parses "6,9,20".
  static NumericalSemigroup parse(std::string_view text);

  const std::vector<std::int64_t>& generators() const { return generators_; }
  std::size_t rank() const { return generators_.size(); }
  std::int64_t smallest() const { return generators_.front(); }
  std::int64_t largest() const { return generators_.back(); }

  /// lcm of the generators, as an arbitrary-precision integer; it can be
  /// large for many generators.
  const Integer& period() const { return period_; }

  /// gcd of consecutive generator differences.
  std::int64_t delta() const { return delta_; }

  /// Product n_1 * ... * n_k.
  Integer generator_product() const;

  /// Reciprocals 1/n_1 > ... > 1/n_k, in generator order.
  std::vector<Rational> reciprocals() const;

  std::string to_string() const;  // "<6,9,20>"

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  std::vector<std::int64_t> generators_;
  Integer period_;
  std::int64_t delta_ = 1;
};

NumericalSemigroup make_semigroup(std::vector<std::int64_t> generators);

/// Membership by boolean reachability over 0..n.
bool contains(const NumericalSemigroup& s, std::int64_t n);

/// Membership table for 0..limit in one pass.
std::vector<bool> membership_table(const NumericalSemigroup& s, std::int64_t limit);

std::int64_t delta_min(const NumericalSemigroup& s);

}  // namespace numsg
