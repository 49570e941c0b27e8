// lightfield.cpp -- light-particle state, closed-form integrals and the 2D
// quadrature oracle.

#include "bo2d/lightfield.hpp"

#include <cmath>

#include "bo2d/specfun.hpp"

namespace bo2d {

LightState light_state(double u, double tol) {
  return light_state(binding_point(u, tol));
}

LightState light_state(const BindingPoint& p) {
  LightState s;
  s.u = p.u;
  s.w = p.w;
  const double wu = p.w * p.u;
  s.D = 1.0 + wu * bessel_k(1, wu);
  s.A2 = p.w * p.w / (2.0 * pi * s.D);
  return s;
}

double phi(double x1, double x2, const LightState& s) {
  const double rp = std::hypot(x1 - 0.5 * s.u, x2);
  const double rm = std::hypot(x1 + 0.5 * s.u, x2);
  if (rp == 0.0 || rm == 0.0)
    throw std::domain_error("phi: evaluation at a center diverges");
  return std::sqrt(s.A2) * (bessel_k(0, s.w * rp) + bessel_k(0, s.w * rm));
}

std::array<double, 2> phi_grad(double x1, double x2, const LightState& s) {
  const double dxp = x1 - 0.5 * s.u, dxm = x1 + 0.5 * s.u;
  const double rp = std::hypot(dxp, x2);
  const double rm = std::hypot(dxm, x2);
  if (rp == 0.0 || rm == 0.0)
    throw std::domain_error("phi_grad: evaluation at a center diverges");
  // d/dr K_0(w r) = -w K_1(w r)
  const double cp = -s.w * bessel_k(1, s.w * rp) / rp;
  const double cm = -s.w * bessel_k(1, s.w * rm) / rm;
  const double a = std::sqrt(s.A2);
  return {a * (cp * dxp + cm * dxm), a * (cp + cm) * x2};
}

double overlap_integral(const LightState& s) {
  return pi * (s.u / s.w) * bessel_k(1, s.w * s.u);
}

double grad_nu_integral(const LightState& s) {
  const double wu = s.w * s.u;
  return (4.0 * pi / (3.0 * std::pow(s.w, 4))) *
         (2.0 + 0.25 * wu * wu * wu * bessel_k(3, wu));
}

double p1(const LightState& s) {
  const double wu = s.w * s.u;
  return -2.0 / s.w - s.w * s.u * s.u * bessel_k(0, wu) / s.D;
}

double p2(const LightState& s) {
  const double wu = s.w * s.u;
  return 6.0 / (s.w * s.w) + 3.0 * s.u * s.u * bessel_k(0, wu) / s.D +
         s.w * s.u * s.u * s.u * bessel_k(1, wu) / s.D;
}

namespace {

void check_consistent(const LightState& s, const BindingPoint& p) {
  if (std::fabs(s.u - p.u) > 1e-14 * (1.0 + std::fabs(p.u)) ||
      std::fabs(s.w - p.w) > 1e-12 * p.w)
    throw std::domain_error("light state and binding point disagree on (u, w)");
}

}  // namespace

double logA_first_derivative(const LightState& s, const BindingPoint& p) {
  check_consistent(s, p);
  const double wu = s.w * s.u;
  const double k0 = bessel_k(0, wu);
  return p.dw / s.w + s.w * s.u * (s.u * p.dw + s.w) * k0 / (2.0 * s.D);
}

LogALaplacianParts logA_laplacian_parts(const LightState& s, const BindingPoint& p) {
  check_consistent(s, p);
  const double u = s.u, w = s.w, D = s.D;
  const double dw = p.dw, d2w = p.d2w;
  const double wu = w * u;
  const double k0 = bessel_k(0, wu);

  LogALaplacianParts t;
  t.s1 = d2w / w;
  t.s2 = dw * u * (u * dw + w) * k0 / (2.0 * D);
  t.s3 = dw * u * (u * dw + w) / (2.0 * D);
  t.s4 = k0 * (2.0 * u * u * dw * dw + 5.0 * wu * dw + w * u * u * d2w + w * w) /
         (2.0 * D);
  t.s5 = 0.75 * wu * wu * (u * dw + w) * (u * dw + w) * k0 * k0 / (D * D);
  t.radial = logA_first_derivative(s, p) / u;
  return t;
}

double logA_laplacian(const LightState& s, const BindingPoint& p) {
  return logA_laplacian_parts(s, p).total();
}

QuadResult quad2d(const std::function<double(double, double)>& f, double u,
                  double w, const QuadSpec& spec) {
  if (!(u > 0.0) || !(w > 0.0))
    throw std::domain_error("quad2d: u and w must be positive");
  const double tol = std::max(spec.tol, 1e-12);
  const double rcut =
      spec.radial_cutoff > 0.0
          ? spec.radial_cutoff
          : (12.0 + std::max(0.0, -std::log(tol))) / (2.0 * w);
  const double rd = std::min(0.25 * u, 0.5 * rcut);
  const double inner_tol = tol / 400.0;
  const double outer_tol = tol / 20.0;

  QuadResult out;

  for (double sgn : {+1.0, -1.0}) {
    const double cx = sgn * 0.5 * u;

    // Local polar frame with its first axis pointing away from the midline:
    // the half-plane condition becomes rho cos(th) > -u/2 for either center
    // and no ray can reach the other (singular) center.
    auto fx = [&](double rho, double th) {
      return f(cx + sgn * rho * std::cos(th), rho * std::sin(th));
    };

    // inner disk; rho = rd t^2 absorbs ln and ln^2 singularities
    auto disk_theta = [&](double th) {
      QuadResult inner = integrate_gk(
          [&](double t) { return 2.0 * rd * rd * t * t * t * fx(rd * t * t, th); },
          0.0, 1.0, inner_tol, spec.subdivision_limit);
      out.evaluations += inner.evaluations;
      if (!inner.converged) out.converged = false;
      return inner.value;
    };
    QuadResult disk =
        integrate_gk(disk_theta, -pi, pi, outer_tol, spec.subdivision_limit);
    out.value += disk.value;
    out.error_bound += disk.error_bound + 2.0 * pi * inner_tol;
    out.evaluations += disk.evaluations;
    if (!disk.converged) out.converged = false;

    // remainder of the half-plane; the angular split isolates the boundary
    // ray where the midline cuts the cutoff circle
    const double th_star = std::acos(std::max(-1.0, -u / (2.0 * rcut)));

    auto ann_theta = [&](double th) {
      const double c = std::cos(th);
      double rho_up = rcut;
      if (std::fabs(th) > th_star) rho_up = u / (2.0 * std::fabs(c));
      if (rho_up <= rd) return 0.0;
      QuadResult inner =
          integrate_gk([&](double rho) { return rho * fx(rho, th); }, rd,
                       rho_up, inner_tol, spec.subdivision_limit);
      out.evaluations += inner.evaluations;
      if (!inner.converged) out.converged = false;
      return inner.value;
    };

    const double cuts[4] = {-pi, -th_star, th_star, pi};
    for (int k = 0; k < 3; ++k) {
      if (cuts[k + 1] <= cuts[k]) continue;
      QuadResult piece = integrate_gk(ann_theta, cuts[k], cuts[k + 1],
                                      outer_tol, spec.subdivision_limit);
      out.value += piece.value;
      out.error_bound += piece.error_bound + (cuts[k + 1] - cuts[k]) * inner_tol;
      out.evaluations += piece.evaluations;
      if (!piece.converged) out.converged = false;
    }
  }
  return out;
}

}  // namespace bo2d
