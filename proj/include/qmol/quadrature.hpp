#pragma once

#include <functional>

namespace qmol {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated error estimate
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f on [a, b].
/// Subintervals are bisected until the local error estimate is below the
/// share of abs_tol assigned to them or max_depth is reached.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol = 1e-12,
                                    int max_depth = 48);

/// Integrate f on [0, inf) through the exponential substitution
/// r = -scale * log(1 - t), t in [0, 1).  scale must exceed the reciprocal
/// of the integrand's exponential decay rate for the mapped integrand to
/// vanish at t = 1; twice the decay length is a good choice.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double scale,
                                         double abs_tol = 1e-12);

}  // namespace qmol
