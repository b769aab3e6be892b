#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numsg/rational.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// f(n) = sum_j c_j(n mod T) n^j with exact rational coefficient rows.
struct Quasipolynomial {
  std::int64_t period = 1;
  int degree = 0;
  std::vector<std::vector<Rational>> rows;  // rows[r][j], j = 0..degree

  std::string to_json() const;  // {"period": T, "degree": d, "rows": {"r": ["c0", ...]}}
};

inline constexpr std::uint64_t kDefaultEvaluationBudget = 1'000'000;

/// p! h_p(1/n_1, ..., 1/n_k) / ((k+p-1)! n_1 ... n_k): the n^{k+p-1}
/// coefficient of Lambda_p(n), the same for every residue class.
Rational leading_coefficient(const NumericalSemigroup& s, unsigned p);

/// Fits Lambda_p as a quasipolynomial of degree k+p-1 and period L = lcm(S).
/// For each residue r the samples n = r + L, ..., r + (k+p)L come from one
/// power-sum table and the (k+p)x(k+p) Vandermonde system in n is solved
/// exactly. Throws Error(BudgetExceeded) when L(k+p) > budget.
Quasipolynomial fit_quasipolynomial(const NumericalSemigroup& s, unsigned p,
                                    std::uint64_t budget = kDefaultEvaluationBudget);

Rational eval_quasipolynomial(const Quasipolynomial& q, std::int64_t n);

struct QuasipolyVerification {
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::int64_t first_mismatch = -1;
  bool leading_coefficients_match = false;
};

/// Compares q(n) with Lambda_p(n) at `per_residue` held-out points
/// n = r + (k+p+j)L, j = 1..per_residue, outside the fitting window, and
/// checks each row's top coefficient against leading_coefficient.
QuasipolyVerification verify_quasipolynomial(const NumericalSemigroup& s, unsigned p, const Quasipolynomial& q,
                                             std::size_t per_residue);

/// Smallest divisor T of q.period such that row r equals row r mod T.
std::int64_t observed_period(const Quasipolynomial& q);

/// Index of the highest nonzero coefficient in each row (-1 for a zero row).
std::vector<int> observed_degrees(const Quasipolynomial& q);

}  // namespace numsg
