// effpot.cpp -- effective-potential terms and singular-coefficient fits.

#include "bo2d/effpot.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "bo2d/specfun.hpp"

namespace bo2d {

double term_1b(const LightState& s, const BindingPoint& p) {
  const double wu = s.w * s.u;
  return -s.w * s.w * s.u * s.u * bessel_k(1, wu) * p.dw / (2.0 * s.D);
}

double term_1c(const LightState& s, const BindingPoint& p) {
  return -0.5 * (p.dw / s.u + p.d2w) * p1(s);
}

double term_1d(const LightState& s, const BindingPoint& p) {
  // the J piece enters as the product A2 * grad_nu_integral, never as a
  // re-derived constant
  return -p.dw * p.dw * (0.5 * p2(s) - s.A2 * grad_nu_integral(s));
}

double term_2(const LightState& s, const BindingPoint& p) {
  return -logA_laplacian(s, p);
}

double term_3a(const LightState& s, const BindingPoint& p) {
  return -logA_first_derivative(s, p) * p.dw * p1(s);
}

double term_3b(const LightState& s, const BindingPoint& p) {
  const double k0 = bessel_k(0, s.w * s.u);
  return 2.0 * logA_first_derivative(s, p) * s.A2 * pi * s.u * k0;
}

CrossTermParts cross_term_parts(const LightState& s, const BindingPoint& p) {
  CrossTermParts parts;
  parts.two_logA = 2.0 * logA_first_derivative(s, p);
  parts.overlap_part = s.A2 * pi * (-2.0 * s.u * bessel_k(0, s.w * s.u));
  parts.dw_p1 = p.dw * p1(s);
  return parts;
}

double cross_term_coefficient(const LightState& s, const BindingPoint& p) {
  const CrossTermParts parts = cross_term_parts(s, p);
  return -(parts.two_logA + parts.overlap_part + parts.dw_p1);
}

namespace {

template <typename F>
double at_u(double u, F&& f) {
  const BindingPoint p = binding_point(u);
  const LightState s = light_state(p);
  return f(s, p);
}

}  // namespace

double term_1b(double u) { return at_u(u, [](auto& s, auto& p) { return term_1b(s, p); }); }
double term_1c(double u) { return at_u(u, [](auto& s, auto& p) { return term_1c(s, p); }); }
double term_1d(double u) { return at_u(u, [](auto& s, auto& p) { return term_1d(s, p); }); }
double term_2(double u) { return at_u(u, [](auto& s, auto& p) { return term_2(s, p); }); }
double term_3a(double u) { return at_u(u, [](auto& s, auto& p) { return term_3a(s, p); }); }
double term_3b(double u) { return at_u(u, [](auto& s, auto& p) { return term_3b(s, p); }); }
double cross_term_coefficient(double u) {
  return at_u(u, [](auto& s, auto& p) { return cross_term_coefficient(s, p); });
}

TermBreakdown term_breakdown(double u, double tol) {
  const BindingPoint p = binding_point(u, tol);
  const LightState s = light_state(p);
  TermBreakdown t;
  t.u = u;
  t.t1b = term_1b(s, p);
  t.t1c = term_1c(s, p);
  t.t1d = term_1d(s, p);
  t.t2 = term_2(s, p);
  t.t3a = term_3a(s, p);
  t.t3b = term_3b(s, p);
  t.cross_coeff = cross_term_coefficient(s, p);
  return t;
}

namespace {

// single fit on a fixed window; rows scaled by u^p so the design matrix is
// well conditioned ({1, u ln u, u, u^2} for p = 2)
double fit_leading(const std::function<double(double)>& f, int power,
                   bool include_log, double lo, double hi, int n) {
  const std::vector<double> us = log_grid(lo, hi, n);
  const int ncol = include_log ? 4 : 3;
  Eigen::MatrixXd A(n, ncol);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    const double u = us[i];
    const double scale = std::pow(u, power);
    y(i) = scale * f(u);
    int c = 0;
    A(i, c++) = 1.0;
    if (include_log) A(i, c++) = u * std::log(u);
    A(i, c++) = u;
    A(i, c++) = u * u;
  }
  const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(y);
  return coef(0);
}

}  // namespace

CoeffFit extract_coeff(const std::function<double(double)>& f, int power,
                       bool include_log, double window_lo, double window_hi,
                       int points) {
  if (!(window_lo > 0.0 && window_hi > window_lo && window_hi <= 0.1))
    throw std::domain_error("extract_coeff: window must satisfy 0 < lo < hi <= 0.1");
  if (points < 8) points = 8;

  CoeffFit fit;
  fit.power = power;
  fit.include_log = include_log;
  fit.window_lo = window_lo;
  fit.window_hi = window_hi;
  fit.value = fit_leading(f, power, include_log, window_lo, window_hi, points);

  // Richardson-style confirmation: refit on the lower half of the window
  // (log scale) and use the drift as the error estimate
  const double mid = std::sqrt(window_lo * window_hi);
  const double refined = fit_leading(f, power, include_log, window_lo, mid, points);
  fit.error = std::fabs(refined - fit.value);
  fit.stable = fit.error < 1e-3 * std::max(std::fabs(fit.value), 1e-9);
  return fit;
}

BetaSquaredResult beta_squared(double window_lo, double window_hi) {
  auto total = [](double u) { return term_breakdown(u).total(); };

  BetaSquaredResult r;
  r.fit = extract_coeff(total, 2, true, window_lo, window_hi);
  // second window shifted by 3x, downward when the upward shift would leave
  // the small-u validity region
  const double shift = (3.0 * window_hi <= 0.1) ? 3.0 : (1.0 / 3.0);
  r.fit_alt = extract_coeff(total, 2, true, shift * window_lo, shift * window_hi);
  r.extracted = r.fit.value;
  r.stable = r.fit.stable && r.fit_alt.stable &&
             std::fabs(r.fit.value - r.fit_alt.value) <
                 1e-3 * std::max(std::fabs(r.fit.value), 1e-9);
  return r;
}

double v_eff(double u, double beta2, double g) {
  if (!(u > 0.0)) throw std::domain_error("v_eff: u must be positive");
  return -2.0 / (std::exp(euler_gamma) * u) + g * beta2 / (u * u);
}

}  // namespace bo2d
