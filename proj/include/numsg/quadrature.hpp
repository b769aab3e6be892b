#pragma once

#include <functional>
#include <optional>

namespace numsg {

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature on [lo, hi]. Panels are bisected
/// until the Kronrod/Gauss difference of each panel falls below its share of
/// abs_tol or max_depth is reached, in which case converged is false.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                                    int max_depth = 40);

}  // namespace numsg
