#include "numsg/rational.hpp"

#include <cctype>
#include <cmath>

#include "numsg/error.hpp"

namespace numsg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!is_signed_digits(s)) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)), s);
    Integer den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(s) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(s) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    if (digits.empty() || !is_signed_digits(digits)) {
      throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(s) + "'");
    }
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational q(Integer(digits, 10), den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(s, s));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_rational(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

double to_double(const Rational& q) { return BigFloat(q).to_double(); }

double to_double(const Integer& z) { return to_double(Rational(z)); }

long double to_long_double(const Rational& q) {
  return mpfr_get_ld(BigFloat(q).get(), MPFR_RNDN);
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::ParseError, "non-finite value");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

// ---------------------------------------------------------------------------

BigFloat::BigFloat() {
  mpfr_init2(value_, kDefaultPrecision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double x) {
  mpfr_init2(value_, kDefaultPrecision);
  mpfr_set_d(value_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q) {
  mpfr_init2(value_, kDefaultPrecision);
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r;
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& a) {
  BigFloat r;
  mpfr_log(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& a) {
  BigFloat r;
  mpfr_exp(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r;
  mpfr_sqrt(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat cbrt(const BigFloat& a) {
  BigFloat r;
  mpfr_cbrt(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_pow(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

}  // namespace numsg
