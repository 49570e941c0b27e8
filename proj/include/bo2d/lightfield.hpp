// lightfield.hpp -- the normalized light-particle state for two centers at
// separation u: closed-form integrals over the light coordinate, the
// w-derivatives of the normalization constant, and an independent adaptive
// 2D quadrature used as the oracle for every closed form.

#pragma once

#include <array>
#include <functional>

#include "bo2d/binding.hpp"
#include "bo2d/quadrature.hpp"

namespace bo2d {

// Solved light-particle ground state at separation u.  Lengths are in
// zeta0, so A2 is the squared normalization constant in units zeta0^{-2}.
struct LightState {
  double u = 0.0;
  double w = 0.0;
  double D = 0.0;   // 1 + w u K_1(wu), the normalization denominator
  double A2 = 0.0;  // w^2 / (2 pi D)
};

LightState light_state(double u, double tol = 1e-13);
LightState light_state(const BindingPoint& p);

// phi(x) = sqrt(A2) [K_0(w r_+) + K_0(w r_-)] with centers (+-u/2, 0).
// Throws std::domain_error exactly at a center (log divergence).
double phi(double x1, double x2, const LightState& s);

// Gradient of phi; same domain restriction.
std::array<double, 2> phi_grad(double x1, double x2, const LightState& s);

// Integral of the product orbital eta_+ eta_- over the plane:
// pi (u/w) K_1(wu).
double overlap_integral(const LightState& s);

// Integral of [d/dw (eta_+ + eta_-)]^2 = [r_+ K_1(w r_+) + r_- K_1(w r_-)]^2
// over the plane: (4 pi / 3 w^4) [2 + (wu)^3 K_3(wu) / 4].
double grad_nu_integral(const LightState& s);

// A^2 d/dw (A^{-2}) = -2/w - w u^2 K_0(wu) / D.
double p1(const LightState& s);

// A^2 d^2/dw^2 (A^{-2}) = 6/w^2 + 3 u^2 K_0(wu)/D + w u^3 K_1(wu)/D.
double p2(const LightState& s);

// (1/A) dA/du along the binding curve:
// dw/w + w u (u dw + w) K_0(wu) / (2D).
double logA_first_derivative(const LightState& s, const BindingPoint& p);

// The five summands of (1/A) d^2A/du^2, kept separate because this is the
// most transcription-prone expression in the construction; radial is the
// (1/u)(1/A) dA/du piece completing the 2D Laplacian.
struct LogALaplacianParts {
  double s1 = 0.0;  // d2w / w
  double s2 = 0.0;  // dw u (u dw + w) K_0 / (2D)
  double s3 = 0.0;  // dw u (u dw + w) / (2D)
  double s4 = 0.0;  // K_0 (2u^2 dw^2 + 5wu dw + wu^2 d2w + w^2) / (2D)
  double s5 = 0.0;  // (3/4) (wu)^2 (u dw + w)^2 K_0^2 / D^2
  double radial = 0.0;
  double total() const { return s1 + s2 + s3 + s4 + s5 + radial; }
};

LogALaplacianParts logA_laplacian_parts(const LightState& s, const BindingPoint& p);

// (1/A) [d^2/du^2 + (1/u) d/du] A, the full 2D Laplacian combination.
double logA_laplacian(const LightState& s, const BindingPoint& p);

// Controls for the 2D oracle quadrature.
struct QuadSpec {
  double radial_cutoff = 0.0;  // 0 = choose from tol and the e^{-2w rho} decay
  double tol = 1e-10;          // absolute; clamped below at 1e-12
  int subdivision_limit = 4000;
};

// Adaptive quadrature of f over the plane for integrands that decay like
// the bound orbitals (rate w) and are at worst log-singular at the two
// centers (+-u/2, 0).  The plane is split into the two half-planes; each is
// integrated in polar coordinates about its center, with an inner disk
// handled by a rho = r t^2 substitution that absorbs the ln and ln^2
// singularities.  Deterministic and sequential.  converged = false after
// the subdivision limit, with the best estimate and bound still filled in.
QuadResult quad2d(const std::function<double(double, double)>& f, double u,
                  double w, const QuadSpec& spec);

}  // namespace bo2d
