// Command-line front end: statistic tables, density and histogram data,
// power sums, quasipolynomial fitting, symmetric functions and the
// identity-check harness.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "numsg/density.hpp"
#include "numsg/error.hpp"
#include "numsg/exact_oracle.hpp"
#include "numsg/quasipoly.hpp"
#include "numsg/report.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/symfun.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIdentity = 4;

std::size_t default_budget() {
  if (const char* env = std::getenv("NUMSG_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed NUMSG_BUDGET='" << env << "'\n";
    }
  }
  return numsg::kDefaultMemoryBudget;
}

std::string full_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_stats(const std::string& gens, std::int64_t n, std::size_t budget, bool degrade, const std::string& format,
              int decimals) {
  const auto s = numsg::NumericalSemigroup::parse(gens);
  const auto report = numsg::compare_table(s, n, budget, degrade);
  if (format == "json") {
    std::cout << report.to_json() << '\n';
  } else if (format == "csv") {
    std::cout << report.to_csv();
  } else {
    std::cout << report.to_table(decimals);
  }
  return 0;
}

int run_density(const std::string& gens, bool piecewise, std::size_t samples) {
  const auto s = numsg::NumericalSemigroup::parse(gens);
  const auto d = numsg::build_density(s);
  if (piecewise) {
    const auto& b = d.breakpoints();
    for (std::size_t i = 0; i < d.pieces().size(); ++i) {
      std::cout << '[' << numsg::to_string(b[i]) << ", " << numsg::to_string(b[i + 1]) << "] : ";
      const auto& c = d.pieces()[i].coeffs();
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (j) std::cout << " + ";
        std::cout << numsg::to_string(c[j]);
        if (j == 1) std::cout << "*x";
        if (j > 1) std::cout << "*x^" << j;
      }
      std::cout << '\n';
    }
    return 0;
  }
  std::cout << "x,F(x)\r\n";
  for (const auto& [x, f] : numsg::density_samples(d, 1.05 / static_cast<double>(s.smallest()), samples)) {
    std::cout << full_precision(x) << ',' << full_precision(f) << "\r\n";
  }
  return 0;
}

int run_moments(const std::string& gens, std::int64_t n, unsigned pmax) {
  const auto s = numsg::NumericalSemigroup::parse(gens);
  const auto sums = numsg::power_sums(s, n, pmax);
  nlohmann::ordered_json j;
  j["semigroup"] = s.generators();
  j["n"] = n;
  j["power_sums"] = nlohmann::ordered_json::array();
  for (unsigned p = 0; p <= pmax; ++p) {
    nlohmann::ordered_json row;
    row["p"] = p;
    row["lambda"] = numsg::to_string(sums.values[p]);
    const numsg::Rational nq(n);
    row["predicted_moment"] = numsg::to_double(numsg::Rational(numsg::asymptotic_moment(s, p) * numsg::pow(nq, p)));
    if (sums.values[0] != 0) {
      row["moment"] = numsg::to_double(numsg::Rational(sums.values[p], sums.values[0]));
    } else {
      row["moment"] = nullptr;
    }
    j["power_sums"].push_back(std::move(row));
  }
  if (pmax >= 3 && sums.values[0] != 0) {
    const auto ms = numsg::moment_stats(sums);
    j["mean"] = ms.mean;
    j["stdev"] = ms.stdev;
    j["skewness"] = ms.skewness;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_quasipoly(const std::string& gens, unsigned p, bool fit, std::size_t verify, std::uint64_t budget) {
  const auto s = numsg::NumericalSemigroup::parse(gens);
  if (!fit) {
    nlohmann::ordered_json j;
    j["semigroup"] = s.generators();
    j["p"] = p;
    j["degree"] = s.rank() + p - 1;
    j["leading_coefficient"] = numsg::to_string(numsg::leading_coefficient(s, p));
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  const auto q = numsg::fit_quasipolynomial(s, p, budget);
  std::cout << q.to_json() << '\n';
  std::cerr << "observed period " << numsg::observed_period(q) << " (fitted with " << q.period << ")\n";
  if (verify > 0) {
    const auto v = numsg::verify_quasipolynomial(s, p, q, verify);
    std::cerr << "verified " << v.checks << " held-out values, " << v.mismatches << " mismatches; leading coefficients "
              << (v.leading_coefficients_match ? "match" : "DIFFER") << '\n';
    if (v.mismatches != 0 || !v.leading_coefficients_match) return kExitIdentity;
  }
  return 0;
}

int run_hsym(const std::string& xs_text, const CLI::Option* p_opt, unsigned p, double z, double tol) {
  const auto xs = numsg::parse_rational_list(xs_text);
  if (p_opt->count() > 0) {
    std::cout << numsg::to_string(numsg::h_complete(p, xs)) << '\n';
    return 0;
  }
  std::vector<double> xd;
  for (const auto& x : xs) xd.push_back(numsg::to_double(x));
  std::cout << full_precision(numsg::h_fractional(z, xd, tol)) << '\n';
  return 0;
}

int run_hist(const std::string& gens, std::int64_t n, const std::string& out, std::size_t budget) {
  const auto s = numsg::NumericalSemigroup::parse(gens);
  const auto hist = numsg::hist_data(s, n, budget);
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open " << out << '\n';
    return 1;
  }
  file << "series,x,y\r\n";
  for (const auto& [x, y] : hist.points) file << "hist," << full_precision(x) << ',' << full_precision(y) << "\r\n";
  for (const auto& [x, y] : hist.density) file << "density," << full_precision(x) << ',' << full_precision(y) << "\r\n";
  std::cerr << "wrote " << hist.points.size() << " histogram points and " << hist.density.size()
            << " density samples to " << out << '\n';
  return 0;
}

int run_identity(std::uint64_t seed, std::size_t trials) {
  const auto summary = numsg::identity_suite(seed, trials);
  std::cout << summary.to_json() << '\n';
  return summary.passed() ? 0 : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization-length statistics of numerical semigroups"};
  app.require_subcommand(1);

  std::string gens;
  std::int64_t n = 0;
  std::size_t budget = default_budget();
  bool degrade = false;
  std::string format = "table";
  int decimals = 2;

  auto* stats = app.add_subcommand("stats", "Actual versus predicted length statistics");
  stats->add_option("--gens", gens, "Generators, e.g. 6,9,20")->required();
  stats->add_option("--n", n, "Semigroup element")->required();
  stats->add_option("--budget", budget, "Memory budget in bytes for the length multiset");
  stats->add_flag("--degrade", degrade, "Fall back to moment statistics when over budget");
  stats->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  stats->add_option("--decimals", decimals);

  bool piecewise = false;
  std::size_t samples = 0;
  auto* density = app.add_subcommand("density", "Limiting length density F");
  density->add_option("--gens", gens)->required();
  auto* pw = density->add_flag("--piecewise", piecewise, "Print exact pieces");
  auto* smp = density->add_option("--samples", samples, "Emit N+1 samples as CSV");
  pw->excludes(smp);

  unsigned pmax = 3;
  auto* moments = app.add_subcommand("moments", "Exact power sums of factorization lengths");
  moments->add_option("--gens", gens)->required();
  moments->add_option("--n", n)->required();
  moments->add_option("--pmax", pmax)->required();

  unsigned p = 0;
  bool fit = false;
  std::size_t verify = 0;
  std::uint64_t eval_budget = numsg::kDefaultEvaluationBudget;
  auto* quasi = app.add_subcommand("quasipoly", "Power-sum quasipolynomials");
  quasi->add_option("--gens", gens)->required();
  quasi->add_option("--p", p)->required();
  quasi->add_flag("--fit", fit);
  quasi->add_option("--verify", verify, "Held-out checks per residue class");
  quasi->add_option("--budget", eval_budget, "Maximum number of oracle evaluations");

  std::string xs;
  double z = 0;
  double tol = 1e-12;
  auto* hsym = app.add_subcommand("hsym", "Complete homogeneous symmetric polynomials");
  hsym->add_option("--xs", xs, "Comma-separated rationals")->required();
  auto* p_opt = hsym->add_option("--p", p, "Integer degree (exact)");
  auto* z_opt = hsym->add_option("--z", z, "Real degree");
  hsym->add_option("--tol", tol);
  p_opt->excludes(z_opt);

  std::string out;
  auto* hist = app.add_subcommand("hist", "Normalized length histogram and density samples");
  hist->add_option("--gens", gens)->required();
  hist->add_option("--n", n)->required();
  hist->add_option("--out", out)->required();
  hist->add_option("--budget", budget);

  std::uint64_t seed = 0;
  std::size_t trials = 100;
  auto* identity = app.add_subcommand("identity", "Randomized symmetric-function identity checks");
  identity->add_option("--seed", seed)->required();
  identity->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*stats) return run_stats(gens, n, budget, degrade, format, decimals);
    if (*density) {
      if (!piecewise && smp->count() == 0) {
        std::cerr << "density: one of --piecewise or --samples is required\n";
        return kExitValidation;
      }
      return run_density(gens, piecewise, samples);
    }
    if (*moments) return run_moments(gens, n, pmax);
    if (*quasi) return run_quasipoly(gens, p, fit, verify, eval_budget);
    if (*hsym) {
      if (p_opt->count() == 0 && z_opt->count() == 0) {
        std::cerr << "hsym: one of --p or --z is required\n";
        return kExitValidation;
      }
      return run_hsym(xs, p_opt, p, z, tol);
    }
    if (*hist) return run_hist(gens, n, out, budget);
    if (*identity) return run_identity(seed, trials);
  } catch (const numsg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == numsg::ErrorCode::BudgetExceeded ? kExitBudget : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
