// binding.cpp -- binding-curve solver and derivatives.

#include "bo2d/binding.hpp"

#include <cmath>

#include "bo2d/specfun.hpp"

namespace bo2d {

double solve_w(double u, double tol) {
  if (!(u > 0.0)) throw std::domain_error("solve_w: u must be positive");
  if (tol < 1e-14) tol = 1e-14;

  auto g = [u](double w) { return std::log(w) - bessel_k(0, w * u); };

  double lo = 1.0 + 1e-12;
  if (g(lo) >= 0.0) {
    // K_0(u) below the bracket resolution: w - 1 ~ K_0(u) to far better
    // than any representable tolerance
    return 1.0 + bessel_k(0, u);
  }
  double hi = 2.0;
  int doublings = 0;
  while (g(hi) < 0.0) {
    hi *= 2.0;
    if (++doublings > 60)
      throw SolverError("solve_w: no sign change while expanding bracket", lo, hi);
  }

  // Newton with bisection fallback; g' = 1/w + u K_1(wu) > 0
  double w = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double gv = g(w);
    if (std::fabs(gv) < tol) return w;
    if (gv > 0.0)
      hi = w;
    else
      lo = w;
    const double gp = 1.0 / w + u * bessel_k(1, w * u);
    double step = gv / gp;
    double next = w - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    w = next;
  }
  throw SolverError("solve_w: iteration cap reached", lo, hi);
}

double dw_du(const BindingPoint& p) {
  const double wu = p.w * p.u;
  const double k1 = bessel_k(1, wu);
  const double D = 1.0 + wu * k1;
  return -p.w * p.w * k1 / D;
}

double d2w_du2(const BindingPoint& p) {
  const double wu = p.w * p.u;
  const double k0 = bessel_k(0, wu);
  const double k1 = bessel_k(1, wu);
  const double D = 1.0 + wu * k1;
  const double dw = p.dw;
  return -p.w * dw * k1 / D - dw / p.u +
         p.w * p.w * (p.u * dw + p.w) * (k0 / D) * (1.0 - wu * k1 / D);
}

BindingPoint binding_point(double u, double tol) {
  BindingPoint p;
  p.u = u;
  p.w = solve_w(u, tol);
  p.dw = dw_du(p);
  p.d2w = d2w_du2(p);
  return p;
}

double w_asymptotic(double u, int order) {
  if (!(u > 0.0)) throw std::domain_error("w_asymptotic: u must be positive");
  if (order != 0 && order != 1)
    throw std::domain_error("w_asymptotic: order must be 0 or 1");
  const double w2 = 2.0 / (u * std::exp(euler_gamma));
  if (order == 0) return w2;
  return w2 * (1.0 - 0.25 * std::exp(-euler_gamma) * u * std::log(u));
}

double xi_iterate(double x, int iters) {
  if (!(x > 0.0)) throw std::domain_error("xi_iterate: x must be positive");
  if (!(x * std::fabs(std::log(x)) < 1.0))
    throw std::domain_error("xi_iterate: requires x |ln x| < 1");
  if (iters < 0) throw std::domain_error("xi_iterate: iters must be >= 0");

  const double xi0 = 2.0 * std::exp(-euler_gamma);
  double xi = xi0;
  double last_step = 0.0;
  for (int i = 0; i < iters; ++i) {
    const double next =
        xi0 * std::exp(-0.25 * xi * std::exp(-euler_gamma) * x * std::log(x));
    const double step = std::fabs(next - xi);
    if (i > 0 && step > last_step && step > 1e-15)
      throw SolverError("xi_iterate: updates stopped contracting", xi, next);
    last_step = step;
    xi = next;
  }
  return xi;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0 && hi > lo) || n < 2)
    throw std::domain_error("log_grid: need 0 < lo < hi and n >= 2");
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (n - 1.0));
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace bo2d
