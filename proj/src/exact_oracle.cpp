#include "numsg/exact_oracle.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "numsg/error.hpp"

namespace numsg {

Integer LengthMultiset::total() const {
  Integer t = 0;
  for (const auto& [len, c] : counts) t += c;
  return t;
}

Integer LengthMultiset::power_sum(unsigned p) const {
  Integer sum = 0;
  Integer term;
  for (const auto& [len, c] : counts) {
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(len), p);
    sum += term * c;
  }
  return sum;
}

std::string LengthMultiset::to_csv() const {
  std::ostringstream os;
  os << "length,count\r\n";
  for (const auto& [len, c] : counts) os << len << ',' << c.get_str() << "\r\n";
  return os.str();
}

std::string LengthMultiset::to_json() const {
  std::ostringstream os;
  os << "{\"n\": " << element << ", \"counts\": {";
  bool first = true;
  for (const auto& [len, c] : counts) {
    if (!first) os << ", ";
    first = false;
    os << '"' << len << "\": \"" << c.get_str() << '"';
  }
  os << "}}";
  return os.str();
}

// ---------------------------------------------------------------------------
// Knapsack table

namespace {

std::size_t max_length_bound(const NumericalSemigroup& s, std::int64_t n) {
  return static_cast<std::size_t>(n / s.smallest());
}

template <class Cell>
bool knapsack_fill(const NumericalSemigroup& s, std::int64_t n, std::vector<Cell>& table, std::size_t width) {
  // table[v * width + l] = number of factorizations of v of length l using
  // the generators processed so far.
  table.assign(static_cast<std::size_t>(n + 1) * width, Cell(0));
  table[0] = Cell(1);
  for (const auto g : s.generators()) {
    for (std::int64_t v = g; v <= n; ++v) {
      Cell* dst = &table[static_cast<std::size_t>(v) * width];
      const Cell* src = &table[static_cast<std::size_t>(v - g) * width];
      // Lengths that can occur at v - g are at most (v - g) / n_1.
      const std::size_t top = std::min<std::size_t>(width - 1, static_cast<std::size_t>((v - g) / s.smallest()) + 1);
      for (std::size_t l = 1; l <= top; ++l) {
        if constexpr (std::is_same_v<Cell, std::uint64_t>) {
          if (__builtin_add_overflow(dst[l], src[l - 1], &dst[l])) return false;
        } else {
          dst[l] += src[l - 1];
        }
      }
    }
  }
  return true;
}

LengthMultiset knapsack_multiset(const NumericalSemigroup& s, std::int64_t n) {
  LengthMultiset out;
  out.element = n;
  const std::size_t width = max_length_bound(s, n) + 1;
  const std::size_t row = static_cast<std::size_t>(n) * width;
  {
    std::vector<std::uint64_t> table;
    if (knapsack_fill(s, n, table, width)) {
      for (std::size_t l = 0; l < width; ++l) {
        if (table[row + l] != 0) out.counts.emplace(static_cast<std::int64_t>(l), Integer(table[row + l]));
      }
      return out;
    }
  }
  std::vector<Integer> table;
  knapsack_fill(s, n, table, width);
  for (std::size_t l = 0; l < width; ++l) {
    if (table[row + l] != 0) out.counts.emplace(static_cast<std::int64_t>(l), table[row + l]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Progression sweep
//
// Fix the multiplicities of n_3..n_k. The remainder w = a_1 n_1 + a_2 n_2 has
// its solutions on a single arithmetic progression in a_2 with step
// n_1 / g (g = gcd(n_1, n_2)), and each step changes the length by
// -(n_2 - n_1) / g. Each outer tuple therefore adds 1 to every entry of a
// strided run of lengths, recorded in a strided difference array. No count
// exceeds the number of outer tuples, so 64-bit cells are exact.

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  return ((old_s % m) + m) % m;
}

class ProgressionSweep {
 public:
  ProgressionSweep(const NumericalSemigroup& s, std::int64_t n) : gens_(s.generators()), n_(n) {
    const std::int64_t g = std::gcd(gens_[0], gens_[1]);
    gcd12_ = g;
    n1_ = gens_[0] / g;
    n2_ = gens_[1] / g;
    step_ = n2_ - n1_;
    inverse_ = mod_inverse(n2_ % n1_, n1_);
    diff_.assign(static_cast<std::size_t>(n / gens_[0]) + static_cast<std::size_t>(step_) + 2, 0);
  }

  LengthMultiset run() {
    outer(gens_.size() - 1, n_, 0);
    LengthMultiset out;
    out.element = n_;
    const std::size_t size = static_cast<std::size_t>(n_ / gens_[0]) + 1;
    const std::size_t s = static_cast<std::size_t>(step_);
    for (std::size_t l = 0; l < size; ++l) {
      if (l >= s) diff_[l] += diff_[l - s];
      if (diff_[l] != 0) out.counts.emplace(static_cast<std::int64_t>(l), Integer(static_cast<long>(diff_[l])));
    }
    return out;
  }

 private:
  void outer(std::size_t index, std::int64_t remaining, std::int64_t length) {
    const std::int64_t g = gens_[index];
    if (index == 2) {
      for (std::int64_t a = 0; a * g <= remaining; ++a) inner(remaining - a * g, length + a);
      return;
    }
    for (std::int64_t a = 0; a * g <= remaining; ++a) outer(index - 1, remaining - a * g, length + a);
  }

  void inner(std::int64_t w, std::int64_t length) {
    if (w % gcd12_ != 0) return;
    w /= gcd12_;
    const std::int64_t a2 = ((w % n1_) * inverse_) % n1_;
    const std::int64_t a2_max = w / n2_;
    if (a2 > a2_max) return;
    const std::int64_t steps = (a2_max - a2) / n1_;
    const std::int64_t top = length + (w - a2 * n2_) / n1_ + a2;
    const std::int64_t bottom = top - steps * step_;
    ++diff_[static_cast<std::size_t>(bottom)];
    --diff_[static_cast<std::size_t>(top + step_)];
  }

  const std::vector<std::int64_t>& gens_;
  std::int64_t n_;
  std::int64_t gcd12_ = 1;
  std::int64_t n1_ = 1;
  std::int64_t n2_ = 1;
  std::int64_t step_ = 1;
  std::int64_t inverse_ = 0;
  std::vector<std::int64_t> diff_;
};

std::size_t progression_bytes(const NumericalSemigroup& s, std::int64_t n) {
  return (max_length_bound(s, n) + static_cast<std::size_t>(s.generators()[1] - s.smallest()) + 2) *
         sizeof(std::int64_t);
}

}  // namespace

std::size_t knapsack_table_bytes(const NumericalSemigroup& s, std::int64_t n) {
  const double cells = static_cast<double>(n + 1) * static_cast<double>(max_length_bound(s, n) + 1);
  const double bytes = cells * sizeof(std::uint64_t);
  if (bytes >= static_cast<double>(std::numeric_limits<std::size_t>::max())) {
    return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(bytes);
}

double progression_work_estimate(const NumericalSemigroup& s, std::int64_t n) {
  // Lattice points of the outer simplex, over-estimated by inflating n.
  const auto& g = s.generators();
  double sum = 0;
  for (std::size_t i = 2; i < g.size(); ++i) sum += static_cast<double>(g[i]);
  const double dim = static_cast<double>(g.size() - 2);
  double est = std::pow(static_cast<double>(n) + sum, dim) / std::tgamma(dim + 1);
  for (std::size_t i = 2; i < g.size(); ++i) est /= static_cast<double>(g[i]);
  return est + 1;
}

LengthMultiset length_multiset(const NumericalSemigroup& s, std::int64_t n, std::size_t memory_budget,
                               LengthAlgorithm algorithm) {
  if (n < 0) return LengthMultiset{n, {}};
  if (n == 0) return LengthMultiset{0, {{0, Integer(1)}}};

  const std::size_t table_bytes = knapsack_table_bytes(s, n);
  const double sweep_work = progression_work_estimate(s, n);
  const bool knapsack_fits = table_bytes <= memory_budget;
  const bool sweep_fits = progression_bytes(s, n) <= memory_budget && sweep_work <= kProgressionWorkLimit;

  if (algorithm == LengthAlgorithm::automatic) {
    const double knapsack_work = static_cast<double>(s.rank()) * static_cast<double>(table_bytes / sizeof(std::uint64_t));
    if (knapsack_fits && (!sweep_fits || knapsack_work <= 4 * sweep_work)) {
      algorithm = LengthAlgorithm::knapsack;
    } else if (sweep_fits) {
      algorithm = LengthAlgorithm::progression;
    } else {
      throw Error(ErrorCode::BudgetExceeded,
                  "length multiset of " + std::to_string(n) + " needs " + std::to_string(table_bytes) +
                      " bytes for the knapsack table (budget " + std::to_string(memory_budget) +
                      ") and about " + std::to_string(sweep_work) + " sweep steps");
    }
  }

  if (algorithm == LengthAlgorithm::knapsack) {
    if (!knapsack_fits) {
      throw Error(ErrorCode::BudgetExceeded, "knapsack table needs " + std::to_string(table_bytes) +
                                                 " bytes, budget is " + std::to_string(memory_budget));
    }
    return knapsack_multiset(s, n);
  }
  if (progression_bytes(s, n) > memory_budget) {
    throw Error(ErrorCode::BudgetExceeded, "progression sweep exceeds the memory budget");
  }
  return ProgressionSweep(s, n).run();
}

// ---------------------------------------------------------------------------
// Power sums
//
// S_p(v) = sum over factorizations of v of length^p. Appending one copy of a
// generator maps length m to m + 1, and (m+1)^p = sum_q C(p,q) m^q, so the
// in-place unbounded-knapsack update is
//   S_p(v) += sum_{q <= p} C(p,q) S_q(v - g).

namespace {

// Row v of the returned buffer holds S_0(v), ..., S_P(v).
std::vector<Integer> power_sum_rows(const NumericalSemigroup& s, std::int64_t n_max, unsigned max_power) {
  const std::size_t width = max_power + 1;
  std::vector<Integer> flat(static_cast<std::size_t>(n_max + 1) * width, Integer(0));
  flat[0] = 1;

  std::vector<std::vector<unsigned long>> binom(width, std::vector<unsigned long>(width, 0));
  for (unsigned p = 0; p < width; ++p) {
    binom[p][0] = 1;
    for (unsigned q = 1; q <= p; ++q) binom[p][q] = binom[p - 1][q - 1] + (q < p ? binom[p - 1][q] : 0);
  }

  for (const auto g : s.generators()) {
    for (std::int64_t v = g; v <= n_max; ++v) {
      Integer* dst = &flat[static_cast<std::size_t>(v) * width];
      const Integer* src = &flat[static_cast<std::size_t>(v - g) * width];
      if (src[0] == 0) continue;
      for (unsigned p = 0; p < width; ++p) {
        for (unsigned q = 0; q <= p; ++q) mpz_addmul_ui(dst[p].get_mpz_t(), src[q].get_mpz_t(), binom[p][q]);
      }
    }
  }
  return flat;
}

}  // namespace

std::vector<std::vector<Integer>> power_sum_table(const NumericalSemigroup& s, std::int64_t n_max,
                                                  unsigned max_power) {
  if (n_max < 0) return {};
  const std::size_t width = max_power + 1;
  std::vector<Integer> flat = power_sum_rows(s, n_max, max_power);
  std::vector<std::vector<Integer>> table(static_cast<std::size_t>(n_max + 1));
  for (std::size_t v = 0; v < table.size(); ++v) {
    const auto row = flat.begin() + static_cast<std::ptrdiff_t>(v * width);
    table[v].assign(std::make_move_iterator(row), std::make_move_iterator(row + static_cast<std::ptrdiff_t>(width)));
  }
  return table;
}

PowerSums power_sums(const NumericalSemigroup& s, std::int64_t n, unsigned max_power) {
  PowerSums out;
  out.element = n;
  if (n < 0) {
    out.values.assign(max_power + 1, Integer(0));
    return out;
  }
  std::vector<Integer> flat = power_sum_rows(s, n, max_power);
  const auto row = flat.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(n) * (max_power + 1));
  out.values.assign(std::make_move_iterator(row), std::make_move_iterator(flat.end()));
  return out;
}

// ---------------------------------------------------------------------------

FactorizationList enumerate_factorizations(const NumericalSemigroup& s, std::int64_t n, std::size_t limit) {
  FactorizationList out;
  if (n < 0) return out;
  const auto& g = s.generators();
  const std::size_t k = g.size();
  // reach[i][v]: v is a combination of g[i..k-1]; prunes dead branches.
  std::vector<std::vector<bool>> reach(k + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  reach[k][0] = true;
  for (std::size_t i = k; i-- > 0;) {
    for (std::int64_t v = 0; v <= n; ++v) {
      bool r = reach[i + 1][static_cast<std::size_t>(v)];
      if (!r && v >= g[i]) r = reach[i][static_cast<std::size_t>(v - g[i])];
      reach[i][static_cast<std::size_t>(v)] = r;
    }
  }
  std::vector<std::int64_t> current(k, 0);
  auto recurse = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (out.limit_exceeded) return;
    if (i == k) {
      if (remaining != 0) return;
      if (out.tuples.size() == limit) {
        out.limit_exceeded = true;
        return;
      }
      out.tuples.push_back(current);
      return;
    }
    for (std::int64_t a = 0; a * g[i] <= remaining; ++a) {
      if (!reach[i + 1][static_cast<std::size_t>(remaining - a * g[i])]) continue;
      current[i] = a;
      self(self, i + 1, remaining - a * g[i]);
      if (out.limit_exceeded) return;
    }
    current[i] = 0;
  };
  recurse(recurse, 0, n);
  return out;
}

// ---------------------------------------------------------------------------

MomentStats moment_stats(const PowerSums& sums) {
  if (sums.values.size() < 4) throw std::invalid_argument("moment_stats needs Lambda_0..Lambda_3");
  const Integer& n0 = sums.values[0];
  if (n0 == 0) throw Error(ErrorCode::EmptyMultiset, "no factorizations of " + std::to_string(sums.element));
  const Rational m1(sums.values[1], n0);
  const Rational m2(sums.values[2], n0);
  const Rational m3(sums.values[3], n0);
  MomentStats out;
  out.exact_mean = m1;
  out.exact_mean.canonicalize();
  out.exact_variance = m2 - m1 * m1;
  out.exact_variance.canonicalize();
  out.mean = to_double(out.exact_mean);
  out.variance = to_double(out.exact_variance);
  out.stdev = sqrt(BigFloat(out.exact_variance)).to_double();
  if (out.exact_variance == 0) {
    out.skewness = std::numeric_limits<double>::quiet_NaN();
  } else {
    const Rational numerator = m3 - 3 * m1 * out.exact_variance - m1 * m1 * m1;
    const BigFloat sigma = sqrt(BigFloat(out.exact_variance));
    out.skewness = (BigFloat(numerator) / (sigma * sigma * sigma)).to_double();
  }
  return out;
}

EmpiricalStats empirical_stats(const LengthMultiset& m) {
  if (m.empty()) throw Error(ErrorCode::EmptyMultiset, "no factorizations of " + std::to_string(m.element));
  PowerSums sums{m.element, {}};
  for (unsigned p = 0; p <= 3; ++p) sums.values.push_back(m.power_sum(p));
  const MomentStats moments = moment_stats(sums);

  EmpiricalStats out;
  out.mean = moments.mean;
  out.variance = moments.variance;
  out.stdev = moments.stdev;
  out.skewness = moments.skewness;
  out.min_length = m.min_length();
  out.max_length = m.max_length();

  const Integer& total = sums.values[0];
  // Order statistic of rank r (1-based): smallest l with cumulative count >= r.
  auto order_stat = [&](const Integer& rank) {
    Integer cumulative = 0;
    for (const auto& [len, c] : m.counts) {
      cumulative += c;
      if (cumulative >= rank) return len;
    }
    return m.max_length();
  };
  if (mpz_odd_p(total.get_mpz_t())) {
    out.median = static_cast<double>(order_stat(Integer((total + 1) / 2)));
  } else {
    const Integer half = total / 2;
    out.median = 0.5 * static_cast<double>(order_stat(half) + order_stat(Integer(half + 1)));
  }

  Integer best = 0;
  for (const auto& [len, c] : m.counts) {
    if (c > best) {
      best = c;
      out.modes.clear();
    }
    if (c == best) out.modes.push_back(len);
  }

  if (m.min_length() == 0) {
    out.harmonic_mean = 0;
    out.geometric_mean = 0;
  } else {
    BigFloat reciprocal_sum;
    BigFloat log_sum;
    for (const auto& [len, c] : m.counts) {
      const BigFloat count{Rational(c)};
      const BigFloat l{Rational(len)};
      reciprocal_sum += count / l;
      log_sum += count * log(l);
    }
    const BigFloat n0{Rational(total)};
    out.harmonic_mean = (n0 / reciprocal_sum).to_double();
    out.geometric_mean = exp(log_sum / n0).to_double();
  }
  return out;
}

}  // namespace numsg
