// pert.cpp -- closed-form first-order corrections and their quadrature
// twins over the ground-state Gamma density.

#include "bo2d/pert.hpp"

#include <cmath>

#include "bo2d/heavy.hpp"
#include "bo2d/quadrature.hpp"
#include "bo2d/specfun.hpp"

namespace bo2d {

namespace {

// Shared dimensionless ingredients: every correction is a combination of
// E_inv  = zeta0 <1/z>, E_log = <ln(c z)>, E_log2 = <ln^2(c z)> and
// E_loginv = zeta0 <ln(c z)/z>.
struct Moments {
  double g;        // 2 m* / M
  double zeta0;
  double a;        // Gamma-density rate
  double c;        // log scale
  double E_inv;
  double E_log;
  double E_log2;
  double E_loginv;
};

Moments closed_moments(const PhysicalParams& params, double beta2) {
  Moments m;
  m.g = params.g();
  m.zeta0 = params.zeta0();
  m.a = radial_scale_a(params, beta2);
  m.c = log_scale_c(params);
  m.E_inv = m.zeta0 * expect_inv_z(params, beta2);
  m.E_log = expect_log_z(params, beta2, m.c);
  m.E_log2 = expect_log2_z(params, beta2, m.c);
  m.E_loginv = m.zeta0 * expect_log_z_over_z(params, beta2, m.c);
  return m;
}

double eg1() { return std::exp(euler_gamma); }
double eg2() { return std::exp(2.0 * euler_gamma); }

// integral_0^80 of t^{power} (2 beta - t) e^{-t} lnfun((c/a) t) dt; the
// derivative of the radial density appears as the (2 beta - t) factor.
double density_derivative_integral(const PhysicalParams& params, double beta2,
                                   double power_offset, int log_power,
                                   double tol) {
  const double beta = std::sqrt(beta2);
  const double a = radial_scale_a(params, beta2);
  const double c_over_a = log_scale_c(params) / a;
  const QuadResult q = integrate_gk(
      [&](double t) {
        const double lg = std::log(c_over_a * t);
        const double lp = (log_power == 2) ? lg * lg : lg;
        return std::exp((2.0 * beta + power_offset) * std::log(t) - t) *
               (2.0 * beta - t) * lp;
      },
      0.0, 80.0 + 40.0 * beta, tol);
  return q.value;
}

}  // namespace

double log_scale_c(const PhysicalParams& params) {
  return std::exp(euler_gamma) / (2.0 * params.zeta0());
}

double binding_log_correction(const PhysicalParams& params, double beta2) {
  const Moments m = closed_moments(params, beta2);
  return m.E_log / (2.0 * eg2());
}

double expect_a1(const PhysicalParams& params, double beta2) {
  const Moments m = closed_moments(params, beta2);
  return m.g * 2.0 / eg1() * m.E_inv;
}

double expect_b(const PhysicalParams& params, double beta2) {
  const Moments m = closed_moments(params, beta2);
  return m.g / eg1() * m.E_loginv;
}

double expect_c(const PhysicalParams& params, double beta2) {
  const Moments m = closed_moments(params, beta2);
  return m.g / eg2() * m.E_log2;
}

double mixed_gradient_first(const PhysicalParams& params, double beta2) {
  const Moments m = closed_moments(params, beta2);
  return -(m.g / 2.0) / eg1() * (m.E_inv + m.E_loginv);
}

double mixed_gradient_second(const PhysicalParams& params, double beta2) {
  const Moments m = closed_moments(params, beta2);
  return m.g / (4.0 * eg2()) * (m.E_log + m.E_log2);
}

double mixed_gradient_first_direct(const PhysicalParams& params, double beta2,
                                   double tol) {
  // pi integral z ln(c z) d(Psi^2)/dz dz
  //   = (a / (2 Gamma(2 beta + 2))) integral t^{2 beta} (2 beta - t) e^{-t}
  //     ln((c/a) t) dt,
  // and the full term is (2m*/M)(zeta0/e^gamma) times that integral.
  const double beta = std::sqrt(beta2);
  const double a = radial_scale_a(params, beta2);
  const double I = density_derivative_integral(params, beta2, 0.0, 1, tol);
  const double norm = std::exp(log_gamma(2.0 * beta + 2.0));
  return params.g() / eg1() * params.zeta0() * a / (2.0 * norm) * I;
}

double mixed_gradient_second_direct(const PhysicalParams& params, double beta2,
                                    double tol) {
  // -(2m*/M)(1/(8 e^{2 gamma})) 2 pi integral z^2 ln^2(c z) d(Psi^2)/dz dz,
  // reduced to the same density-derivative integral with one more power of t.
  const double beta = std::sqrt(beta2);
  const double I = density_derivative_integral(params, beta2, 1.0, 2, tol);
  const double norm = std::exp(log_gamma(2.0 * beta + 2.0));
  return -params.g() / (8.0 * eg2()) * I / norm;
}

double symmetrization_diagnostic(const PhysicalParams& params, double beta2,
                                 double tol) {
  const double g = params.g();
  const double zeta0 = params.zeta0();
  const double c = log_scale_c(params);
  // P'(z)/2 with P = g (zeta0/e^gamma) ln(c z)
  //               - g (1/(4 e^{2 gamma})) z ln^2(c z) / (z in zeta0 units):
  // <P'/2> = (g zeta0 / (2 e^gamma)) <1/z>
  //          - (g / (8 e^{2 gamma})) (<ln^2(c z)> + 2 <ln(c z)>).
  return moment_quadrature(
      params, beta2,
      [&](double z) {
        const double lg = std::log(c * z);
        return g * zeta0 / (2.0 * eg1()) / z - g / (8.0 * eg2()) * (lg * lg + 2.0 * lg);
      },
      tol);
}

std::vector<CorrectionReport> corrections_report(const PhysicalParams& params,
                                                 double beta2, double tol) {
  const double c = log_scale_c(params);
  const double zeta0 = params.zeta0();
  const double g = params.g();
  std::vector<CorrectionReport> out;

  auto moment = [&](const std::function<double(double)>& f) {
    return moment_quadrature(params, beta2, f, tol);
  };

  out.push_back({"binding_log", binding_log_correction(params, beta2),
                 moment([&](double z) { return std::log(c * z) / (2.0 * eg2()); }),
                 "O(ln(M/m*))", c});
  out.push_back({"a1", expect_a1(params, beta2),
                 moment([&](double z) { return g * 2.0 / eg1() * zeta0 / z; }),
                 "O(1)", c});
  out.push_back({"b", expect_b(params, beta2),
                 moment([&](double z) {
                   return g / eg1() * zeta0 * std::log(c * z) / z;
                 }),
                 "O(ln(M/m*))", c});
  out.push_back({"c", expect_c(params, beta2),
                 moment([&](double z) {
                   const double lg = std::log(c * z);
                   return g / eg2() * lg * lg;
                 }),
                 "O((m*/M) ln^2(M/m*))", c});
  out.push_back({"mixed1", mixed_gradient_first(params, beta2),
                 mixed_gradient_first_direct(params, beta2, tol),
                 "O(ln(M/m*))", c});
  out.push_back({"mixed2", mixed_gradient_second(params, beta2),
                 mixed_gradient_second_direct(params, beta2, tol),
                 "O((m*/M) ln^2(M/m*))", c});
  return out;
}

}  // namespace bo2d
