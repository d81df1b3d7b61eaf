#include "landau1d/potential.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "landau1d/quadrature.hpp"

namespace landau1d {

void PotentialKind::validate() const {
  switch (family) {
    case Family::Regularized:
      if (m < 0) throw DomainError("Regularized potential requires m >= 0");
      if (!(B > 0.0)) throw DomainError("Regularized potential requires B > 0");
      break;
    case Family::LowerBoundG:
    case Family::UpperBoundG:
      if (!(k > 2.0)) throw DomainError("g_k envelope requires k > 2");
      break;
    case Family::Cutoff:
    case Family::Coulomb:
      break;
  }
}

void AccuracyBudget::validate() const {
  const double eps = std::numeric_limits<double>::epsilon();
  if (!(rel_tol >= 8.0 * eps))
    throw DomainError("AccuracyBudget: rel_tol below 8*machine epsilon");
  if (!(abs_tol > 0.0)) throw DomainError("AccuracyBudget: abs_tol must be > 0");
  if (max_quadrature_nodes < 16)
    throw DomainError("AccuracyBudget: node budget too small");
}

namespace {

// Laplace continued fraction for erfcx on x > 4, evaluated by modified
// Lentz.  F = x + (1/2)/(x + 1/(x + (3/2)/(x + ...))), erfcx = 1/(sqrt(pi) F).
double erfcx_continued_fraction(double x) {
  const double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double a = 0.5 * i;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 4.0 * std::numeric_limits<double>::epsilon())
      break;
  }
  return 1.0 / (kSqrtPi * f);
}

}  // namespace

double erfcx(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) {
    // erfcx(-x) = 2 exp(x^2) - erfcx(x); exp overflows past x ~ 26.6 and the
    // result is inf, which is the correct limit value in double precision.
    return 2.0 * std::exp(x * x) - erfcx(-x);
  }
  if (x <= 4.0) return std::exp(x * x) * std::erfc(x);
  return erfcx_continued_fraction(x);
}

double v0(double x) { return kSqrtPi * erfcx(std::abs(x)); }

double w_pair(double B, double s) {
  if (!(B > 0.0)) throw DomainError("w_pair requires B > 0");
  const double sqrt_b = std::sqrt(B);
  // W_00^B(s) = 2^{-1/2} V_0^B(|s|/sqrt 2), with V_0^B(x) = sqrt(B) V_0(sqrt(B) x).
  return sqrt_b * v0(sqrt_b * std::abs(s) / std::numbers::sqrt2) /
         std::numbers::sqrt2;
}

double v_cut(double x) { return 1.0 / (std::abs(x) + 1.0); }

double nu(double x) { return 1.0 / v0(x); }

double nu_prime(double x) {
  if (x < 0.0)
    throw DomainError("nu_prime is defined for x >= 0; odd extension is the caller's");
  const double n = nu(x);
  return 2.0 * n * (n - x);
}

double g_bound(double k, double x) {
  if (!(k > 2.0)) throw DomainError("g_bound requires k > 2");
  const double ax = std::abs(x);
  return k / ((k - 1.0) * ax + std::sqrt(ax * ax + k));
}

double localization_error(double x) {
  if (x < 0.0) throw DomainError("localization_error requires x >= 0");
  const double n = nu(x);
  const double d = n - x;
  return n * d * d;
}

double omega(const PotentialKind& kind) {
  kind.validate();
  if (kind.family == PotentialKind::Family::Cutoff) return kOmegaCutoff;
  if (kind.family == PotentialKind::Family::Regularized && kind.m == 0 &&
      kind.B == 1.0)
    return kOmegaRegularized;
  throw UnsupportedKind(
      "omega is only derived for Regularized(0, 1) and Cutoff");
}

namespace {

// V_m^B on |x| >= 1/sqrt(B): Gauss-Laguerre in the weight u^m e^{-u} with
// node doubling until the budget's tolerance holds.
double vm_laguerre(int m, double B, double ax, const AccuracyBudget& budget) {
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int n = 32; n <= budget.max_quadrature_nodes; n *= 2) {
    const LaguerreRule rule = laguerre_rule(m, n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      sum += rule.weights[i] / std::sqrt(ax * ax + rule.nodes[i] / B);
    if (!std::isnan(previous)) {
      const double diff = std::abs(sum - previous);
      if (diff <= 0.5 * std::max(budget.rel_tol * std::abs(sum), budget.abs_tol))
        return sum;
    }
    previous = sum;
  }
  throw QuadratureNotConverged(
      "vm: Gauss-Laguerre node budget exhausted at m=" + std::to_string(m),
      previous, std::numeric_limits<double>::quiet_NaN());
}

// V_m^B near the origin: substitute u = s^2 so the integrand
// 2 s^{2m+1} e^{-s^2} / sqrt(x^2 + s^2/B) is smooth through u = 0, then
// integrate adaptively.
double vm_adaptive(int m, double B, double ax, const AccuracyBudget& budget) {
  const double s_max = std::sqrt(200.0 + 2.0 * m);
  auto integrand = [m, B, ax](double s) {
    return 2.0 * std::pow(s, 2 * m + 1) * std::exp(-s * s) /
           std::sqrt(ax * ax + s * s / B);
  };
  QuadratureResult r =
      integrate_adaptive_gk(integrand, 0.0, s_max, budget.rel_tol,
                            budget.abs_tol, budget.max_quadrature_nodes * 15);
  double correction = 1.0;
  // normalize by m!: the weight u^m e^{-u} integrates to m!.
  for (int i = 2; i <= m; ++i) correction *= i;
  if (!r.converged)
    throw QuadratureNotConverged("vm: adaptive quadrature budget exhausted",
                                 r.value / correction, r.error_estimate);
  return r.value / correction;
}

}  // namespace

double vm(int m, double B, double x, const AccuracyBudget& budget) {
  if (m < 0) throw DomainError("vm requires m >= 0");
  if (!(B > 0.0)) throw DomainError("vm requires B > 0");
  budget.validate();
  if (m > 160)
    throw DomainError("vm: m too large for double-precision factorial scaling");
  const double ax = std::abs(x);
  if (ax * std::sqrt(B) < 1.0) return vm_adaptive(m, B, ax, budget);
  return vm_laguerre(m, B, ax, budget);
}

double evaluate(const PotentialKind& kind, double x,
                const AccuracyBudget& budget) {
  kind.validate();
  switch (kind.family) {
    case PotentialKind::Family::Regularized:
      if (kind.m == 0) {
        const double sqrt_b = std::sqrt(kind.B);
        return sqrt_b * v0(sqrt_b * x);
      }
      return vm(kind.m, kind.B, x, budget);
    case PotentialKind::Family::Cutoff:
      return v_cut(x);
    case PotentialKind::Family::Coulomb:
      if (std::abs(x) < kCoulombGuard)
        throw DomainError("Coulomb potential evaluated inside the |x| guard band");
      return 1.0 / std::abs(x);
    case PotentialKind::Family::LowerBoundG:
    case PotentialKind::Family::UpperBoundG:
      return g_bound(kind.k, x);
  }
  throw DomainError("unknown PotentialKind");
}

}  // namespace landau1d
