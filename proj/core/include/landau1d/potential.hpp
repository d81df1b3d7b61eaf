#pragma once

#include <compare>

#include "landau1d/errors.hpp"

namespace landau1d {

/// Which one-dimensional potential family is in play.
///
/// Regularized(m, B) is the transverse average of the Coulomb potential over
/// the Landau orbital with angular momentum -m at field strength B; it is
/// finite at the origin and behaves like 1/|x| far away.  Cutoff is the
/// exactly solvable comparison potential 1/(|x|+1).  Coulomb (1/|x|) is
/// evaluation-only for |x| > 0 and exists for comparison tables.  The two
/// G-bound families are the envelopes k/((k-1)x + sqrt(x^2+k)) that sandwich
/// the m = 0 regularized potential (k = 3 below, k = 4 above).
struct PotentialKind {
  enum class Family { Regularized, Cutoff, Coulomb, LowerBoundG, UpperBoundG };

  Family family = Family::Regularized;
  int m = 0;       // Regularized: orbital index, m >= 0
  double B = 1.0;  // Regularized: field strength, B > 0
  double k = 3.0;  // G bounds: envelope parameter, k > 2

  static PotentialKind regularized(int m = 0, double B = 1.0) {
    PotentialKind kind;
    kind.family = Family::Regularized;
    kind.m = m;
    kind.B = B;
    kind.validate();
    return kind;
  }
  static PotentialKind cutoff() { return {Family::Cutoff, 0, 1.0, 3.0}; }
  static PotentialKind coulomb() { return {Family::Coulomb, 0, 1.0, 3.0}; }
  static PotentialKind lower_bound_g(double k) {
    PotentialKind kind{Family::LowerBoundG, 0, 1.0, k};
    kind.validate();
    return kind;
  }
  static PotentialKind upper_bound_g(double k) {
    PotentialKind kind{Family::UpperBoundG, 0, 1.0, k};
    kind.validate();
    return kind;
  }

  void validate() const;
  bool operator==(const PotentialKind&) const = default;
};

/// Tolerances and node budget for the quadrature-backed evaluations.
struct AccuracyBudget {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  int max_quadrature_nodes = 8192;

  void validate() const;  // rel_tol >= 8*eps, abs_tol > 0
};

/// Scaled complementary error function exp(x^2) erfc(x), overflow-free for
/// all x >= -26.6.  Product form for x <= 4, Laplace continued fraction
/// beyond; the switchover is validated against a quadrature oracle in the
/// test suite.  Negative arguments use erfcx(-x) = 2 exp(x^2) - erfcx(x).
double erfcx(double x);

/// V0(x) = sqrt(pi) exp(x^2) erfc(|x|): the m = 0 regularized potential at
/// unit field.  Even, strictly positive, strictly decreasing on x >= 0,
/// with 1/|x| - 1/(2|x|^3) < V0(x) < 1/|x| in the tail.
double v0(double x);

/// V_m^B(x) = (1/m!) \int_0^inf u^m e^{-u} / sqrt(x^2 + u/B) du.
///
/// Gauss-Laguerre with node doubling away from the origin; adaptive
/// Gauss-Kronrod on a substituted integrand for |x| < 1/sqrt(B) where the
/// integrand peak meets the square-root kink.  Satisfies the scaling
/// relation V_m^B(x) = sqrt(B) V_m^1(sqrt(B) x) and the ordering
/// V_{m+1}^B <= V_m^B <= V_0^B <= 1/|x|.
///
/// Throws QuadratureNotConverged if the node budget runs out first.
double vm(int m, double B, double x, const AccuracyBudget& budget = {});

/// Pair interaction W_00^B(s) = 2^{-1/2} V_0^B(|s|/sqrt(2)).
double w_pair(double B, double s);

/// Cut-off comparison potential 1/(|x|+1).
double v_cut(double x);

/// nu(x) = 1/V0(x).  Convex, nearly linear, nu(0) = 1/sqrt(pi).
double nu(double x);

/// nu'(x) = 2 nu(x) (nu(x) - x), valid for x >= 0; the odd extension for
/// x < 0 is the caller's responsibility.
double nu_prime(double x);

/// Envelope g_k(x) = k / ((k-1) x + sqrt(x^2 + k)) for k > 2, x >= 0
/// (extended evenly to x < 0).  g_4 > V0 > g_3 pointwise; g_pi is the
/// sharper lower bound.
double g_bound(double k, double x);

/// nu(x) (nu(x) - x)^2 = |nu'(x)|^2 / (4 nu(x)): the localization error
/// density.  Non-increasing on [0, inf) with value pi^{-3/2} at 0.
double localization_error(double x);

/// sup_x |nu'(x)|^2 / (4 nu(x)) for the two potentials the ionization bound
/// covers: pi^{-3/2} for Regularized(0, 1), 0.25 for Cutoff.  Throws
/// UnsupportedKind otherwise.
double omega(const PotentialKind& kind);

/// Evaluate any PotentialKind at x (even in x).  Coulomb throws DomainError
/// inside the |x| < 1e-12 guard band.
double evaluate(const PotentialKind& kind, double x,
                const AccuracyBudget& budget = {});

/// Guard band below which comparisons against 1/|x| are excluded.
inline constexpr double kCoulombGuard = 1e-12;

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kInvSqrtPi = 0.5641895835477562869;
inline constexpr double kOmegaRegularized = 0.17958712212516656169;  // pi^-3/2
inline constexpr double kOmegaCutoff = 0.25;

}  // namespace landau1d
