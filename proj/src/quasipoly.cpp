#include "numsg/quasipoly.hpp"

#include <sstream>

#include "numsg/error.hpp"
#include "numsg/exact_oracle.hpp"
#include "numsg/matrix.hpp"
#include "numsg/symfun.hpp"

namespace numsg {

namespace {

std::int64_t period_as_int(const NumericalSemigroup& s) {
  if (!s.period().fits_slong_p()) throw Error(ErrorCode::BudgetExceeded, "period does not fit in 64 bits");
  return s.period().get_si();
}

}  // namespace

std::string Quasipolynomial::to_json() const {
  std::ostringstream os;
  os << "{\"period\": " << period << ", \"degree\": " << degree << ", \"rows\": {";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << ", ";
    os << '"' << r << "\": [";
    for (std::size_t j = 0; j < rows[r].size(); ++j) {
      if (j) os << ", ";
      os << '"' << to_string(rows[r][j]) << '"';
    }
    os << ']';
  }
  os << "}}";
  return os.str();
}

Rational leading_coefficient(const NumericalSemigroup& s, unsigned p) {
  const std::vector<Rational> xs = s.reciprocals();
  const std::size_t k = s.rank();
  Rational c = h_complete(p, xs) * Rational(factorial(p));
  c /= Rational(Integer(factorial(k + p - 1) * s.generator_product()));
  return c;
}

Quasipolynomial fit_quasipolynomial(const NumericalSemigroup& s, unsigned p, std::uint64_t budget) {
  const std::int64_t period = period_as_int(s);
  const std::size_t unknowns = s.rank() + p;
  const double required = static_cast<double>(period) * static_cast<double>(unknowns);
  if (required > static_cast<double>(budget)) {
    throw Error(ErrorCode::BudgetExceeded, "fitting needs " + std::to_string(static_cast<std::uint64_t>(required)) +
                                               " evaluations, budget is " + std::to_string(budget));
  }
  const std::int64_t n_max = static_cast<std::int64_t>(unknowns + 1) * period - 1;
  const auto table = power_sum_table(s, n_max, p);

  Quasipolynomial q;
  q.period = period;
  q.degree = static_cast<int>(unknowns) - 1;
  q.rows.resize(static_cast<std::size_t>(period));
  for (std::int64_t r = 0; r < period; ++r) {
    DenseMatrix<Rational> a(unknowns, unknowns);
    std::vector<Rational> b(unknowns);
    for (std::size_t j = 0; j < unknowns; ++j) {
      const std::int64_t n = r + static_cast<std::int64_t>(j + 1) * period;
      Rational power = 1;
      for (std::size_t i = 0; i < unknowns; ++i) {
        a(j, i) = power;
        power *= n;
      }
      b[j] = table[static_cast<std::size_t>(n)][p];
    }
    q.rows[static_cast<std::size_t>(r)] = solve_exact(a, b);
  }
  return q;
}

Rational eval_quasipolynomial(const Quasipolynomial& q, std::int64_t n) {
  const std::int64_t r = ((n % q.period) + q.period) % q.period;
  const auto& row = q.rows[static_cast<std::size_t>(r)];
  Rational value = 0;
  for (std::size_t j = row.size(); j-- > 0;) value = value * n + row[j];
  return value;
}

QuasipolyVerification verify_quasipolynomial(const NumericalSemigroup& s, unsigned p, const Quasipolynomial& q,
                                             std::size_t per_residue) {
  QuasipolyVerification out;
  const std::int64_t first = static_cast<std::int64_t>(s.rank() + p + 1);
  const std::int64_t n_max = (first + static_cast<std::int64_t>(per_residue)) * q.period - 1;
  const auto table = power_sum_table(s, n_max, p);
  for (std::int64_t r = 0; r < q.period; ++r) {
    for (std::size_t j = 0; j < per_residue; ++j) {
      const std::int64_t n = r + (first + static_cast<std::int64_t>(j)) * q.period;
      ++out.checks;
      if (eval_quasipolynomial(q, n) != Rational(table[static_cast<std::size_t>(n)][p])) {
        if (out.mismatches++ == 0) out.first_mismatch = n;
      }
    }
  }
  const Rational lead = leading_coefficient(s, p);
  out.leading_coefficients_match = true;
  for (const auto& row : q.rows) {
    if (row.size() != s.rank() + p || row.back() != lead) out.leading_coefficients_match = false;
  }
  return out;
}

std::int64_t observed_period(const Quasipolynomial& q) {
  for (std::int64_t t = 1; t < q.period; ++t) {
    if (q.period % t != 0) continue;
    bool same = true;
    for (std::int64_t r = t; r < q.period && same; ++r) {
      same = q.rows[static_cast<std::size_t>(r)] == q.rows[static_cast<std::size_t>(r % t)];
    }
    if (same) return t;
  }
  return q.period;
}

std::vector<int> observed_degrees(const Quasipolynomial& q) {
  std::vector<int> out;
  for (const auto& row : q.rows) {
    int d = static_cast<int>(row.size()) - 1;
    while (d >= 0 && row[static_cast<std::size_t>(d)] == 0) --d;
    out.push_back(d);
  }
  return out;
}

}  // namespace numsg
