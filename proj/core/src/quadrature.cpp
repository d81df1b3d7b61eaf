#include "landau1d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "landau1d/linalg.hpp"

namespace landau1d {

namespace {

// 15-point Kronrod abscissae/weights on [-1, 1] with the embedded 7-point
// Gauss weights (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double integral;
  double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    result_kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
  }
  const double integral = result_kronrod * half;
  const double err = std::abs((result_kronrod - result_gauss) * half);
  return {integral, err};
}

struct Panel {
  double a, b, integral, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace

QuadratureResult integrate_adaptive_gk(const std::function<double(double)>& f,
                                       double a, double b, double rel_tol,
                                       double abs_tol, int max_evaluations) {
  QuadratureResult out;
  std::priority_queue<Panel> queue;
  PanelEstimate first = gk15(f, a, b);
  out.evaluations = 15;
  queue.push({a, b, first.integral, first.error});
  double total = first.integral;
  double total_err = first.error;
  while (out.evaluations + 30 <= max_evaluations) {
    if (total_err <= std::max(rel_tol * std::abs(total), abs_tol)) break;
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    PanelEstimate left = gk15(f, worst.a, mid);
    PanelEstimate right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.integral + right.integral - worst.integral;
    total_err += left.error + right.error - worst.error;
    queue.push({worst.a, mid, left.integral, left.error});
    queue.push({mid, worst.b, right.integral, right.error});
  }
  out.value = total;
  out.error_estimate = total_err;
  out.converged = total_err <= std::max(rel_tol * std::abs(total), abs_tol);
  return out;
}

LaguerreRule laguerre_rule(int m, int n) {
  if (n < 1) throw std::invalid_argument("laguerre_rule: n >= 1");
  if (m < 0) throw std::invalid_argument("laguerre_rule: m >= 0");
  // Jacobi matrix of the generalized Laguerre polynomials with alpha = m:
  // diag 2i+m+1, offdiag sqrt(i(i+m)).
  std::vector<double> d(n), e(n > 1 ? n - 1 : 0), row(n, 0.0);
  for (int i = 0; i < n; ++i) d[i] = 2.0 * i + m + 1.0;
  for (int i = 1; i < n; ++i)
    e[i - 1] = std::sqrt(static_cast<double>(i) * (i + m));
  row[0] = 1.0;
  tql2_row(d, e, &row);
  LaguerreRule rule;
  rule.nodes = std::move(d);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.weights[i] = row[i] * row[i];
  return rule;
}

}  // namespace landau1d
