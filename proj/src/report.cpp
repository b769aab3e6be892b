#include "numsg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <random>
#include <sstream>

#include "numsg/error.hpp"
#include "numsg/symfun.hpp"

namespace numsg {

namespace {

StatRow make_row(std::string stat, std::string item, std::optional<double> actual, double predicted) {
  StatRow row{std::move(stat), std::move(item), actual, {}, predicted, std::nullopt, std::nullopt};
  if (actual) {
    row.abs_dev = std::abs(*actual - predicted);
    if (predicted != 0) row.rel_dev = *row.abs_dev / std::abs(predicted);
  }
  return row;
}

struct Actuals {
  std::optional<double> count, moment2, mean, variance, stdev, skewness;
  std::optional<double> median, mode, min, max, harmonic, geometric;
  std::vector<std::int64_t> modes;
};

std::vector<StatRow> build_rows(const NumericalSemigroup& s, std::int64_t n, const Actuals& a) {
  const AsymptoticStats p = predicted_stats(s);
  const double nd = static_cast<double>(n);
  const Rational nq(n);
  const std::size_t k = s.rank();

  std::vector<StatRow> rows;
  rows.push_back(make_row("count", "a", a.count,
                          to_double(Rational(p.count_coeff * numsg::pow(nq, static_cast<unsigned long>(k - 1))))));
  rows.push_back(make_row("moment2", "b", a.moment2, to_double(Rational(asymptotic_moment(s, 2) * nq * nq))));
  rows.push_back(make_row("mean", "c", a.mean, to_double(Rational(p.mean_slope * nq))));
  rows.push_back(make_row("variance", "d", a.variance, to_double(Rational(p.variance_coeff * nq * nq))));
  rows.push_back(make_row("stdev", "d", a.stdev, p.stdev_coeff * nd));
  rows.push_back(make_row("median", "e", a.median, p.median_const * nd));
  rows.push_back(make_row("mode", "f", a.mode, p.mode_const * nd));
  rows.back().actual_set = a.modes;
  rows.push_back(make_row("skewness", "g", a.skewness, p.skewness_const));
  rows.push_back(make_row("min", "h", a.min, to_double(Rational(p.min_slope * nq))));
  rows.push_back(make_row("max", "h", a.max, to_double(Rational(p.max_slope * nq))));
  rows.push_back(make_row("harmonic_mean", "i", a.harmonic, p.harmonic_const * nd));
  rows.push_back(make_row("geometric_mean", "j", a.geometric, nd * std::exp(p.geometric_log_const)));
  return rows;
}

std::string actual_text(const StatRow& row, int decimals) {
  if (!row.actual) return "n/a";
  if (row.actual_set.size() > 1) {
    std::string s = "{";
    for (std::size_t i = 0; i < row.actual_set.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(row.actual_set[i]);
    }
    return s + "}";
  }
  return format_fixed(*row.actual, decimals);
}

std::string csv_number(const std::optional<double>& v) {
  if (!v || std::isnan(*v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  if (std::isnan(value)) return "nan";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

const StatRow& StatisticsReport::row(const std::string& stat) const {
  for (const auto& r : rows) {
    if (r.stat == stat) return r;
  }
  throw std::out_of_range("no statistic named " + stat);
}

std::string StatisticsReport::to_json() const {
  nlohmann::ordered_json j;
  j["semigroup"] = semigroup.generators();
  j["n"] = n;
  j["degraded"] = degraded;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["stat"] = r.stat;
    row["actual"] = r.actual ? nlohmann::ordered_json(*r.actual) : nlohmann::ordered_json(nullptr);
    row["predicted"] = r.predicted;
    row["item"] = r.item;
    if (!r.actual_set.empty()) row["actual_set"] = r.actual_set;
    row["abs_dev"] = r.abs_dev ? nlohmann::ordered_json(*r.abs_dev) : nlohmann::ordered_json(nullptr);
    row["rel_dev"] = r.rel_dev ? nlohmann::ordered_json(*r.rel_dev) : nlohmann::ordered_json(nullptr);
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2);
}

std::string StatisticsReport::to_csv() const {
  std::ostringstream os;
  os << "stat,item,actual,predicted,abs_dev,rel_dev\r\n";
  for (const auto& r : rows) {
    os << r.stat << ',' << r.item << ',' << csv_number(r.actual) << ',' << csv_number(r.predicted) << ','
       << csv_number(r.abs_dev) << ',' << csv_number(r.rel_dev) << "\r\n";
  }
  return os.str();
}

std::string StatisticsReport::to_table(int decimals) const {
  std::ostringstream os;
  os << "S = " << semigroup.to_string() << ", n = " << n << (degraded ? "  (moment statistics only)" : "") << '\n';
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %24s %24s %12s\n", "statistic", "actual", "predicted", "rel.dev");
  os << line;
  for (const auto& r : rows) {
    const int d = r.stat == "skewness" ? std::max(decimals, 7) : decimals;
    const std::string rel = r.rel_dev ? format_fixed(*r.rel_dev * 100, 3) + "%" : "";
    std::snprintf(line, sizeof line, "%-16s %24s %24s %12s\n", r.stat.c_str(), actual_text(r, d).c_str(),
                  format_fixed(r.predicted, d).c_str(), rel.c_str());
    os << line;
  }
  return os.str();
}

StatisticsReport predicted_table(const NumericalSemigroup& s, std::int64_t n) {
  return StatisticsReport{s, n, false, build_rows(s, n, Actuals{})};
}

StatisticsReport compare_table(const NumericalSemigroup& s, std::int64_t n, std::size_t memory_budget,
                               bool allow_degrade) {
  Actuals a;
  bool degraded = false;
  try {
    const LengthMultiset m = length_multiset(s, n, memory_budget);
    const EmpiricalStats e = empirical_stats(m);
    a.count = to_double(m.total());
    a.moment2 = to_double(Rational(m.power_sum(2), m.total()));
    a.mean = e.mean;
    a.variance = e.variance;
    a.stdev = e.stdev;
    a.skewness = e.skewness;
    a.median = e.median;
    a.modes = e.modes;
    // Representative mode: the one closest to the middle of the tie set.
    a.mode = static_cast<double>(e.modes[e.modes.size() / 2]);
    a.min = static_cast<double>(e.min_length);
    a.max = static_cast<double>(e.max_length);
    a.harmonic = e.harmonic_mean;
    a.geometric = e.geometric_mean;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::BudgetExceeded || !allow_degrade) throw;
    degraded = true;
    const PowerSums sums = power_sums(s, n, 3);
    const MomentStats ms = moment_stats(sums);
    a.count = to_double(sums.values[0]);
    a.moment2 = to_double(Rational(sums.values[2], sums.values[0]));
    a.mean = ms.mean;
    a.variance = ms.variance;
    a.stdev = ms.stdev;
    a.skewness = ms.skewness;
  }
  return StatisticsReport{s, n, degraded, build_rows(s, n, a)};
}

// ---------------------------------------------------------------------------

std::vector<std::pair<double, double>> density_samples(const DensityF& d, double upper, std::size_t samples) {
  std::vector<std::pair<double, double>> out;
  out.reserve(samples + 1);
  for (std::size_t i = 0; i <= samples; ++i) {
    const double x = samples == 0 ? 0.0 : upper * static_cast<double>(i) / static_cast<double>(samples);
    out.emplace_back(x, eval_density(d, x));
  }
  return out;
}

HistogramData hist_data(const NumericalSemigroup& s, std::int64_t n, std::size_t memory_budget, std::size_t samples) {
  HistogramData out;
  out.n = n;
  const LengthMultiset m = length_multiset(s, n, memory_budget);
  if (!m.empty()) {
    const Integer total = m.total();
    for (const auto& [len, c] : m.counts) {
      const double x = static_cast<double>(len) / static_cast<double>(n);
      const double h = to_double(Rational(Integer(c * n), total));
      out.points.emplace_back(x, h);
    }
  }
  const DensityF d = build_density(s);
  out.density = density_samples(d, 1.05 / static_cast<double>(s.smallest()), samples);
  return out;
}

double kolmogorov_distance(const HistogramData& hist, const DensityF& d) {
  if (hist.points.empty()) return 1.0;
  std::vector<std::pair<double, double>> pts = hist.points;
  std::sort(pts.begin(), pts.end());
  const double n = static_cast<double>(hist.n);
  double below = 0;
  double sup = 0;
  for (const auto& [x, h] : pts) {
    const double f = cdf(d, x);
    const double above = below + h / n;
    sup = std::max({sup, std::abs(below - f), std::abs(above - f)});
    below = above;
  }
  return sup;
}

// ---------------------------------------------------------------------------

std::string IdentitySummary::to_json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["trials"] = trials;
  j["schur"] = {{"checks", schur_checks}, {"failures", schur_failures}};
  j["egf"] = {{"checks", egf_checks}, {"failures", egf_failures}, {"max_residual", egf_max_residual}};
  j["positivity"] = {{"checks", positivity_checks}, {"failures", positivity_failures}};
  j["h_moment"] = {{"checks", moment_checks}, {"failures", moment_failures}};
  j["passed"] = passed();
  return j.dump(2);
}

namespace {

// Portable draws from the raw engine output, so a seed means the same
// inputs with any standard library.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  double real(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<Rational> distinct_rationals(Draw& draw, std::size_t k, bool nonzero) {
  std::vector<Rational> xs;
  while (xs.size() < k) {
    Rational q(draw.integer(-20, 20), static_cast<unsigned long>(draw.integer(1, 9)));
    q.canonicalize();
    if (nonzero && q == 0) continue;
    if (std::find(xs.begin(), xs.end(), q) != xs.end()) continue;
    xs.push_back(q);
  }
  return xs;
}

std::vector<double> separated_reals(Draw& draw, std::size_t k) {
  std::vector<double> xs;
  while (xs.size() < k) {
    const double x = draw.real(-2.0, 2.0);
    if (std::abs(x) < 0.1) continue;
    bool close = false;
    for (double y : xs) close = close || std::abs(x - y) < 0.25;
    if (!close) xs.push_back(x);
  }
  return xs;
}

}  // namespace

IdentitySummary identity_suite(std::uint64_t seed, std::size_t trials) {
  IdentitySummary out;
  out.seed = seed;
  out.trials = trials;
  Draw draw(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    {
      const auto k = static_cast<std::size_t>(draw.integer(2, 5));
      const auto p = static_cast<unsigned>(draw.integer(0, 8));
      const std::vector<Rational> xs = distinct_rationals(draw, k, false);
      ++out.schur_checks;
      if (schur_identity_residual(p, xs) != 0) ++out.schur_failures;
    }
    {
      const auto k = static_cast<std::size_t>(draw.integer(2, 5));
      const std::vector<double> xs = separated_reals(draw, k);
      const std::complex<double> z(draw.real(-2.0, 2.0), draw.real(-2.0, 2.0));
      const double r = egf_residual(xs, z, 80);
      ++out.egf_checks;
      out.egf_max_residual = std::max(out.egf_max_residual, r);
      if (!(r < kEgfResidualTolerance)) ++out.egf_failures;
    }
    for (int rep = 0; rep < 2; ++rep) {
      const auto k = static_cast<std::size_t>(draw.integer(1, 6));
      const auto d = static_cast<unsigned>(draw.integer(0, 4));
      std::vector<Rational> xs;
      while (xs.size() < k) {
        const double x = draw.real(-3.0, 3.0);
        if (x != 0) xs.push_back(from_double(x));
      }
      ++out.positivity_checks;
      if (h_complete(2 * d, xs) < 0) ++out.positivity_failures;
    }
    {
      const auto k = static_cast<std::size_t>(draw.integer(3, 5));
      const auto p = static_cast<unsigned>(draw.integer(0, 5));
      std::vector<Rational> xs = distinct_rationals(draw, k, false);
      std::sort(xs.begin(), xs.end());
      const HDensity<Rational> h = build_H(xs);
      ++out.moment_checks;
      if (Rational(binomial(p + k - 1, p)) * h.moment(p) != h_complete(p, xs)) ++out.moment_failures;
    }
  }
  return out;
}

}  // namespace numsg
