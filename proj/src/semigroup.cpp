#include "numsg/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "numsg/error.hpp"

namespace numsg {

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) {
  if (generators.empty()) throw Error(ErrorCode::TooFewGenerators, "empty generator list");
  for (auto g : generators) {
    if (g < 1) throw Error(ErrorCode::NonPositive, "generator " + std::to_string(g) + " is not positive");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.size() < 3) {
    throw Error(ErrorCode::TooFewGenerators,
                "need at least 3 distinct generators, got " + std::to_string(generators.size()));
  }
  std::int64_t g = 0;
  for (auto n : generators) g = std::gcd(g, n);
  if (g != 1) throw Error(ErrorCode::GcdNotOne, "generators have gcd " + std::to_string(g));

  generators_ = std::move(generators);
  period_ = 1;
  for (auto n : generators_) {
    const Integer gi(static_cast<long>(n));
    mpz_lcm(period_.get_mpz_t(), period_.get_mpz_t(), gi.get_mpz_t());
  }
  delta_ = 0;
  for (std::size_t i = 1; i < generators_.size(); ++i) delta_ = std::gcd(delta_, generators_[i] - generators_[i - 1]);
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
  std::vector<std::int64_t> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::ParseError, "bad generator '" + std::string(tok) + "'");
    }
    gens.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return NumericalSemigroup(std::move(gens));
}

Integer NumericalSemigroup::generator_product() const {
  Integer p = 1;
  for (auto n : generators_) p *= static_cast<long>(n);
  return p;
}

std::vector<Rational> NumericalSemigroup::reciprocals() const {
  std::vector<Rational> r;
  r.reserve(generators_.size());
  for (auto n : generators_) r.emplace_back(1, static_cast<unsigned long>(n));
  return r;
}

std::string NumericalSemigroup::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(generators_[i]);
  }
  return s + ">";
}

NumericalSemigroup make_semigroup(std::vector<std::int64_t> generators) {
  return NumericalSemigroup(std::move(generators));
}

std::vector<bool> membership_table(const NumericalSemigroup& s, std::int64_t limit) {
  if (limit < 0) return {};
  std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
  reach[0] = true;
  for (std::int64_t v = 1; v <= limit; ++v) {
    for (auto g : s.generators()) {
      if (g > v) break;
      if (reach[static_cast<std::size_t>(v - g)]) {
        reach[static_cast<std::size_t>(v)] = true;
        break;
      }
    }
  }
  return reach;
}

bool contains(const NumericalSemigroup& s, std::int64_t n) {
  if (n < 0) return false;
  return membership_table(s, n).back();
}

std::int64_t delta_min(const NumericalSemigroup& s) { return s.delta(); }

}  // namespace numsg
