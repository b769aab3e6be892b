#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>
#include <vector>

namespace numsg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", a signed integer, or a finite decimal such as "-0.125"
/// into an exact canonical rational. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "1/6,1/9,1/20".
std::vector<Rational> parse_rational_list(std::string_view text);

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Correctly rounded conversion (mpq_get_d truncates).
double to_double(const Rational& q);
double to_double(const Integer& z);
long double to_long_double(const Rational& q);

Rational pow(const Rational& base, unsigned long exponent);

/// Exact rational with the same value as a finite double.
Rational from_double(double x);

/// Minimal RAII wrapper over an MPFR value. Used where an exact rational
/// expression has to be pushed through log/sqrt/cbrt without losing the
/// digits that cancel afterwards.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  BigFloat();
  explicit BigFloat(double x);
  explicit BigFloat(const Rational& q);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  double to_double() const;
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
  BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
  BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }

  friend BigFloat log(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat cbrt(const BigFloat& a);
  friend BigFloat pow(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t value_;
};

}  // namespace numsg
