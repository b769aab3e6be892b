#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "numsg/polynomial.hpp"

namespace numsg {

/// Piecewise polynomial on consecutive intervals [b_i, b_{i+1}] that is zero
/// outside [b_0, b_m]. Alongside the pieces it stores the running
/// antiderivative (the CDF when the function is a density), normalized so
/// that it vanishes at b_0 and is continuous at every breakpoint.
template <class Scalar>
class PiecewisePolynomial {
 public:
  PiecewisePolynomial() = default;

  PiecewisePolynomial(std::vector<Scalar> breakpoints, std::vector<Polynomial<Scalar>> pieces)
      : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() != pieces_.size() + 1 || pieces_.empty()) {
      throw std::invalid_argument("piecewise polynomial needs m pieces on m+1 breakpoints");
    }
    Scalar accumulated(0);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      Polynomial<Scalar> anti = pieces_[i].antiderivative();
      const Scalar offset = Scalar(accumulated - anti(breakpoints_[i]));
      anti += Polynomial<Scalar>::constant(offset);
      accumulated = anti(breakpoints_[i + 1]);
      cumulative_.push_back(std::move(anti));
    }
  }

  const std::vector<Scalar>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial<Scalar>>& pieces() const { return pieces_; }
  const std::vector<Polynomial<Scalar>>& cumulative_pieces() const { return cumulative_; }
  std::size_t size() const { return pieces_.size(); }
  const Scalar& lower() const { return breakpoints_.front(); }
  const Scalar& upper() const { return breakpoints_.back(); }

  /// Index of the piece whose closed interval contains x, preferring the
  /// right-hand piece at interior breakpoints; nullopt outside the support.
  std::optional<std::size_t> locate(const Scalar& x) const {
    if (x < breakpoints_.front() || x > breakpoints_.back()) return std::nullopt;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    idx = idx == 0 ? 0 : idx - 1;
    return std::min(idx, pieces_.size() - 1);
  }

  Scalar operator()(const Scalar& x) const {
    const auto idx = locate(x);
    return idx ? pieces_[*idx](x) : Scalar(0);
  }

  /// Integral from -infinity to x.
  Scalar cumulative(const Scalar& x) const {
    if (x <= breakpoints_.front()) return Scalar(0);
    if (x >= breakpoints_.back()) return total();
    return cumulative_[*locate(x)](x);
  }

  Scalar total() const { return cumulative_.back()(breakpoints_.back()); }

  /// Integral of t^p times the function.
  Scalar moment(unsigned p) const {
    Scalar sum(0);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      sum += pieces_[i].shifted(p).integrate(breakpoints_[i], breakpoints_[i + 1]);
    }
    return sum;
  }

 private:
  std::vector<Scalar> breakpoints_;
  std::vector<Polynomial<Scalar>> pieces_;
  std::vector<Polynomial<Scalar>> cumulative_;
};

}  // namespace numsg
