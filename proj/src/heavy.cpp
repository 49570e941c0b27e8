// heavy.cpp -- analytic spectrum, Cash-Karp shooting cross-check,
// wavefunction sampling and ground-state moments for the heavy radial
// problem.

#include "bo2d/heavy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "bo2d/binding.hpp"
#include "bo2d/quadrature.hpp"
#include "bo2d/specfun.hpp"

namespace bo2d {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Radial ODE as a first-order system in y = (R, R').
struct RadialRhs {
  double beta2;
  double K;
  void operator()(double r, const double y[2], double dy[2]) const {
    dy[0] = y[1];
    dy[1] = -y[1] / r + (beta2 / (r * r) - K / r + 0.25) * y[0];
  }
};

// One Cash-Karp RK45 step with embedded 4th-order error estimate.
void cash_karp_step(const RadialRhs& rhs, double r, const double y[2], double h,
                    double yout[2], double yerr[2]) {
  static constexpr double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
  static constexpr double b21 = 0.2;
  static constexpr double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
  static constexpr double b41 = 0.3, b42 = -0.9, b43 = 1.2;
  static constexpr double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0,
                          b54 = 35.0 / 27.0;
  static constexpr double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0,
                          b63 = 575.0 / 13824.0, b64 = 44275.0 / 110592.0,
                          b65 = 253.0 / 4096.0;
  static constexpr double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0,
                          c4 = 125.0 / 594.0, c6 = 512.0 / 1771.0;
  static constexpr double d1 = c1 - 2825.0 / 27648.0, d3 = c3 - 18575.0 / 48384.0,
                          d4 = c4 - 13525.0 / 55296.0, d5 = -277.0 / 14336.0,
                          d6 = c6 - 0.25;

  double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], yt[2];
  rhs(r, y, k1);
  for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * b21 * k1[i];
  rhs(r + a2 * h, yt, k2);
  for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (b31 * k1[i] + b32 * k2[i]);
  rhs(r + a3 * h, yt, k3);
  for (int i = 0; i < 2; ++i)
    yt[i] = y[i] + h * (b41 * k1[i] + b42 * k2[i] + b43 * k3[i]);
  rhs(r + a4 * h, yt, k4);
  for (int i = 0; i < 2; ++i)
    yt[i] = y[i] + h * (b51 * k1[i] + b52 * k2[i] + b53 * k3[i] + b54 * k4[i]);
  rhs(r + a5 * h, yt, k5);
  for (int i = 0; i < 2; ++i)
    yt[i] = y[i] + h * (b61 * k1[i] + b62 * k2[i] + b63 * k3[i] + b64 * k4[i] +
                        b65 * k5[i]);
  rhs(r + a6 * h, yt, k6);
  for (int i = 0; i < 2; ++i) {
    yout[i] = y[i] + h * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
    yerr[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i]);
  }
}

struct BranchResult {
  double R = kNaN;
  double Rp = kNaN;
  int sign_changes = 0;
  bool ok = false;
};

// Adaptive integration of the radial system from r_from to r_to (either
// direction).  The solution is renormalized when it grows large; sign
// changes of R at accepted steps are counted.
BranchResult integrate_branch(const RadialRhs& rhs, double r_from, double r_to,
                              double R0, double Rp0) {
  constexpr double rtol = 1e-12;
  constexpr double atol = 1e-300;
  constexpr int max_steps = 400000;

  BranchResult out;
  double r = r_from;
  double y[2] = {R0, Rp0};
  const double dir = (r_to > r_from) ? 1.0 : -1.0;
  double h = dir * std::min(1e-3, 0.1 * std::abs(r_to - r_from));
  double prev_sign = (y[0] > 0.0) ? 1.0 : (y[0] < 0.0 ? -1.0 : 0.0);

  for (int step = 0; step < max_steps; ++step) {
    if (dir * (r + h - r_to) > 0.0) h = r_to - r;
    double ynew[2], yerr[2];
    cash_karp_step(rhs, r, y, h, ynew, yerr);
    double errmax = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      errmax = std::max(errmax, std::abs(yerr[i]) / scale);
    }
    if (!std::isfinite(errmax) || !std::isfinite(ynew[0]) || !std::isfinite(ynew[1]))
      return out;
    if (errmax <= 1.0) {
      r += h;
      y[0] = ynew[0];
      y[1] = ynew[1];
      const double s = (y[0] > 0.0) ? 1.0 : (y[0] < 0.0 ? -1.0 : 0.0);
      if (s != 0.0 && prev_sign != 0.0 && s != prev_sign) ++out.sign_changes;
      if (s != 0.0) prev_sign = s;
      const double mag = std::max(std::abs(y[0]), std::abs(y[1]));
      if (mag > 1e100) {
        y[0] /= mag;
        y[1] /= mag;
      }
      if (dir * (r - r_to) >= 0.0) {
        out.R = y[0];
        out.Rp = y[1];
        out.ok = true;
        return out;
      }
      h *= std::min(5.0, 0.9 * std::pow(errmax > 0.0 ? errmax : 1e-16, -0.2));
    } else {
      h *= std::max(0.2, 0.9 * std::pow(errmax, -0.2));
    }
    if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(r))) return out;
  }
  return out;
}

struct ShootSample {
  double mismatch = kNaN;
  int nodes = 0;
  bool ok = false;
};

// Normalized Wronskian mismatch between the outward-regular and
// inward-decaying branches at r_mid; zero exactly at eigenvalues.
ShootSample shoot_once(double K, double beta2, int n) {
  const double beta = std::sqrt(beta2);
  const RadialRhs rhs{beta2, K};

  const double r0 = 1e-6;
  const double r_max = 40.0 + 10.0 * n;
  const double r_mid = std::max(2.0 * K, 1.0) < 0.8 * r_max
                           ? std::max(2.0 * K, 1.0)
                           : 0.5 * r_max;

  // Frobenius start: R = r^beta (1 + a1 r + a2 r^2) from
  // k (k + 2 beta) a_k = -K a_{k-1} + (1/4) a_{k-2}.
  const double a1 = -K / (1.0 + 2.0 * beta);
  const double a2 = (0.25 + K * K / (1.0 + 2.0 * beta)) / (4.0 * (1.0 + beta));
  const double rb = std::pow(r0, beta);
  const double poly = 1.0 + a1 * r0 + a2 * r0 * r0;
  const double dpoly = a1 + 2.0 * a2 * r0;
  const double R_start = rb * poly;
  const double Rp_start = beta * rb / r0 * poly + rb * dpoly;

  ShootSample out;
  if (!(R_start > 0.0) || !std::isfinite(Rp_start)) return out;  // underflowed start

  const BranchResult fwd = integrate_branch(rhs, r0, r_mid, R_start, Rp_start);
  if (!fwd.ok) return out;

  // Decaying asymptote R ~ e^{-r/2} r^{K - 1/2}: R'/R = -1/2 + (K - 1/2)/r.
  const BranchResult bwd =
      integrate_branch(rhs, r_max, r_mid, 1.0, -0.5 + (K - 0.5) / r_max);
  if (!bwd.ok) return out;

  const double norm = std::sqrt((fwd.R * fwd.R + fwd.Rp * fwd.Rp) *
                                (bwd.R * bwd.R + bwd.Rp * bwd.Rp));
  if (!(norm > 0.0) || !std::isfinite(norm)) return out;
  out.mismatch = (fwd.Rp * bwd.R - bwd.Rp * fwd.R) / norm;
  out.nodes = fwd.sign_changes + bwd.sign_changes;
  out.ok = std::isfinite(out.mismatch);
  return out;
}

double laguerre_norm(int n, double two_beta) {
  // integral_0^inf r^{alpha} e^{-r} [L_n^alpha]^2 (with alpha = 2 beta) times
  // the extra (2n + alpha + 1) from the r-weighted measure:
  // integral r^{alpha+1} e^{-r} [L_n^alpha]^2 = (2n + alpha + 1) Gamma(n+alpha+1)/n!.
  return (2.0 * n + two_beta + 1.0) *
         std::exp(log_gamma(n + two_beta + 1.0) - log_gamma(n + 1.0));
}

}  // namespace

SpectrumResult energy_level(int n, const PhysicalParams& params, double beta2) {
  if (n < 0) throw std::domain_error("energy_level: n must be >= 0");
  if (beta2 < 0.0) throw std::domain_error("energy_level: beta2 must be >= 0");
  SpectrumResult out;
  out.n = n;
  out.beta = std::sqrt(beta2);
  out.K_analytic = n + 0.5 + out.beta;
  out.K_shooting = kNaN;
  out.discrepancy = kNaN;
  const double lambda = params.lambda_ratio();
  out.energy_ratio = -lambda * std::exp(-2.0 * euler_gamma) /
                     (out.K_analytic * out.K_analytic);
  return out;
}

double shoot_eigenvalue(int n, double beta2, double tol) {
  if (n < 0) throw std::domain_error("shoot_eigenvalue: n must be >= 0");
  if (beta2 < 0.0) throw std::domain_error("shoot_eigenvalue: beta2 must be >= 0");
  tol = std::max(tol, 1e-10);
  const double beta = std::sqrt(beta2);

  const double K_lo = beta + 0.06;
  const double K_hi = beta + 0.5 + n + 3.5;
  const double step = 0.2;

  double prev_K = kNaN, prev_m = kNaN;
  bool have_prev = false;
  std::vector<std::pair<double, double>> brackets;
  for (double K = K_lo; K <= K_hi + 0.5 * step; K += step) {
    const ShootSample s = shoot_once(K, beta2, n);
    if (!s.ok) {
      have_prev = false;
      continue;
    }
    if (have_prev && prev_m * s.mismatch < 0.0) brackets.emplace_back(prev_K, K);
    if (s.mismatch == 0.0) brackets.emplace_back(K, K);
    prev_K = K;
    prev_m = s.mismatch;
    have_prev = true;
  }
  if (brackets.empty())
    throw SolverError("shoot_eigenvalue: no sign change in the scan window",
                      K_lo, K_hi);

  for (const auto& [Ka0, Kb0] : brackets) {
    double Ka = Ka0, Kb = Kb0;
    ShootSample sa = shoot_once(Ka, beta2, n);
    if (!sa.ok) continue;
    ShootSample last = sa;
    double K_root = 0.5 * (Ka + Kb);
    while (Kb - Ka > tol) {
      K_root = 0.5 * (Ka + Kb);
      const ShootSample sm = shoot_once(K_root, beta2, n);
      if (!sm.ok) break;
      last = sm;
      if (std::abs(sm.mismatch) < 1e-15) break;
      if (sa.mismatch * sm.mismatch <= 0.0) {
        Kb = K_root;
      } else {
        Ka = K_root;
        sa = sm;
      }
    }
    K_root = 0.5 * (Ka + Kb);
    if (last.nodes == n) return K_root;
  }
  throw SolverError(
      "shoot_eigenvalue: no root with the requested node count in the scan window",
      K_lo, K_hi);
}

SpectrumResult solve_level(int n, const PhysicalParams& params, double beta2,
                           double tol) {
  SpectrumResult out = energy_level(n, params, beta2);
  out.K_shooting = shoot_eigenvalue(n, beta2, tol);
  out.discrepancy = std::abs(out.K_shooting - out.K_analytic);
  return out;
}

int RadialWave::nodes() const {
  int count = 0;
  double prev = 0.0;
  for (double v : R) {
    const double s = (v > 0.0) ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
    if (s != 0.0 && prev != 0.0 && s != prev) ++count;
    if (s != 0.0) prev = s;
  }
  return count;
}

RadialWave radial_wavefunction(int n, double beta2, const PhysicalParams& params) {
  if (n < 0) throw std::domain_error("radial_wavefunction: n must be >= 0");
  RadialWave out;
  out.n = n;
  out.beta = std::sqrt(beta2);
  const double K = n + 0.5 + out.beta;
  out.scale = params.z0() * K;

  // Normalization in the measure 2 pi z dz with z = scale * r:
  // 2 pi scale^2 C^2 integral r^{2 beta + 1} e^{-r} [L_n^{2 beta}]^2 dr = 1.
  const double norm = laguerre_norm(n, 2.0 * out.beta);
  out.C = 1.0 / std::sqrt(2.0 * pi * out.scale * out.scale * norm);

  // Log-spaced samples resolve the r^beta cusp region, linear samples the
  // oscillatory body out to where e^{-r/2} has died.
  const std::vector<double> logs = log_grid(1e-4, 1.0, 40);
  const double r_hi = 30.0 + 10.0 * n;
  out.r.assign(logs.begin(), logs.end());
  const int n_lin = 160;
  for (int i = 1; i <= n_lin; ++i)
    out.r.push_back(1.0 + (r_hi - 1.0) * i / static_cast<double>(n_lin));
  out.R.reserve(out.r.size());
  for (double r : out.r)
    out.R.push_back(out.C * std::pow(r, out.beta) * std::exp(-0.5 * r) *
                    laguerre(n, 2.0 * out.beta, r));
  return out;
}

double radial_scale_a(const PhysicalParams& params, double beta2) {
  const double beta = std::sqrt(beta2);
  return 2.0 / (params.z0() * (1.0 + 2.0 * beta));
}

double expect_z(const PhysicalParams& params, double beta2) {
  return expect_z_over_z0(beta2) * params.z0();
}

double expect_z_over_z0(double beta2) {
  const double beta = std::sqrt(beta2);
  return (beta + 1.0) * (1.0 + 2.0 * beta);
}

double expect_inv_z(const PhysicalParams& params, double beta2) {
  const double beta = std::sqrt(beta2);
  return radial_scale_a(params, beta2) / (2.0 * beta + 1.0);
}

double expect_log_z(const PhysicalParams& params, double beta2, double c) {
  const double beta = std::sqrt(beta2);
  const double a = radial_scale_a(params, beta2);
  return digamma(2.0 * beta + 2.0) - std::log(a) + std::log(c);
}

double expect_log2_z(const PhysicalParams& params, double beta2, double c) {
  const double beta = std::sqrt(beta2);
  const double mean = expect_log_z(params, beta2, c);
  return mean * mean + trigamma(2.0 * beta + 2.0);
}

double expect_log_z_over_z(const PhysicalParams& params, double beta2, double c) {
  const double beta = std::sqrt(beta2);
  const double a = radial_scale_a(params, beta2);
  return a / (2.0 * beta + 1.0) *
         (digamma(2.0 * beta + 1.0) + std::log(c) - std::log(a));
}

double moment_quadrature(const PhysicalParams& params, double beta2,
                         const std::function<double(double)>& f, double tol) {
  const double beta = std::sqrt(beta2);
  const double a = radial_scale_a(params, beta2);
  const double log_norm = log_gamma(2.0 * beta + 2.0);
  // Substituting t = a z turns the density into t^{2 beta + 1} e^{-t} / Gamma;
  // the window truncates below 1e-30 of the mass (peak at 2 beta + 1).
  const double t_hi = 80.0 + 40.0 * beta;
  const QuadResult q = integrate_gk(
      [&](double t) {
        return f(t / a) * std::exp((2.0 * beta + 1.0) * std::log(t) - t - log_norm);
      },
      0.0, t_hi, tol);
  return q.value;
}

double expect_z_level(int n, const PhysicalParams& params, double beta2,
                      double tol) {
  const double beta = std::sqrt(beta2);
  const double K = n + 0.5 + beta;
  const double scale = params.z0() * K;
  const double r_hi = 80.0 + 10.0 * n + 40.0 * beta;
  auto density = [&](double r, double extra_power) {
    const double L = laguerre(n, 2.0 * beta, r);
    return std::exp((2.0 * beta + 1.0 + extra_power) * std::log(r) - r) * L * L;
  };
  const QuadResult num =
      integrate_gk([&](double r) { return density(r, 1.0); }, 0.0, r_hi, tol);
  const QuadResult den =
      integrate_gk([&](double r) { return density(r, 0.0); }, 0.0, r_hi, tol);
  return scale * num.value / den.value;
}

}  // namespace bo2d
