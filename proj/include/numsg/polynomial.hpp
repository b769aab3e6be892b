#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace numsg {

/// Dense univariate polynomial in the monomial basis, coefficients stored
/// lowest degree first. Scalar is Rational for exact work and double or
/// long double for floating point.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }

  /// a + b*x
  static Polynomial linear(const Scalar& a, const Scalar& b) { return Polynomial({a, b}); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

  template <class Arg>
  Arg operator()(const Arg& x) const {
    Arg r(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      r = r * x;
      r = r + Arg(coeffs_[i]);
    }
    return r;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(Scalar(coeffs_[i] * Scalar(i)));
    return Polynomial(std::move(d));
  }

  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const {
    std::vector<Scalar> a(coeffs_.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = Scalar(coeffs_[i] / Scalar(i + 1));
    return Polynomial(std::move(a));
  }

  Scalar integrate(const Scalar& lo, const Scalar& hi) const {
    const Polynomial a = antiderivative();
    return Scalar(a(hi) - a(lo));
  }

  /// x^shift * p(x)
  Polynomial shifted(std::size_t shift) const {
    if (is_zero()) return {};
    std::vector<Scalar> c(shift, Scalar(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(c));
  }

  Polynomial pow(unsigned exponent) const {
    Polynomial r = constant(Scalar(1));
    for (unsigned i = 0; i < exponent; ++i) r = r * *this;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  template <class Other, class Convert>
  Polynomial<Other> cast(Convert convert) const {
    std::vector<Other> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(convert(v));
    return Polynomial<Other>(std::move(c));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

}  // namespace numsg
