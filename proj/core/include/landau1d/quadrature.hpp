#pragma once

#include <functional>
#include <vector>

namespace landau1d {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b].  Splits the interval with the
/// largest error estimate until sum(err) <= max(rel_tol*|I|, abs_tol) or the
/// evaluation budget is spent.
QuadratureResult integrate_adaptive_gk(const std::function<double(double)>& f,
                                       double a, double b, double rel_tol,
                                       double abs_tol, int max_evaluations);

/// Generalized Gauss-Laguerre rule for the weight u^m e^{-u}, normalized so
/// that the weights sum to 1 (i.e. w_i = classic weight / m!).  Built by
/// Golub-Welsch: implicit QL on the Jacobi matrix carrying only the first
/// eigenvector row, so no factorial ever materializes.
struct LaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
LaguerreRule laguerre_rule(int m, int n);

}  // namespace landau1d
