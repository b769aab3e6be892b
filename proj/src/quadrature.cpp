#include "numsg/quadrature.hpp"

#include <array>
#include <cmath>

namespace numsg {

namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the 7-point rule at the odd-indexed Kronrod nodes.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double value;
  double error;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[static_cast<std::size_t>(i)];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[static_cast<std::size_t>(i)] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[static_cast<std::size_t>(i / 2)] * sum;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

QuadratureResult recurse(const std::function<double(double)>& f, double lo, double hi, double tol, int depth) {
  const Panel whole = gauss_kronrod(f, lo, hi);
  if (whole.error <= tol) return {whole.value, whole.error, true};
  if (depth == 0) return {whole.value, whole.error, false};
  const double mid = 0.5 * (lo + hi);
  const QuadratureResult left = recurse(f, lo, mid, 0.5 * tol, depth - 1);
  const QuadratureResult right = recurse(f, mid, hi, 0.5 * tol, depth - 1);
  return {left.value + right.value, left.error_estimate + right.error_estimate, left.converged && right.converged};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                                    int max_depth) {
  if (hi <= lo) return {0.0, 0.0, true};
  return recurse(f, lo, hi, abs_tol, max_depth);
}

}  // namespace numsg
