// binding.hpp -- the renormalized two-center binding curve in dimensionless
// form: ln w = K_0(w u) with u = z / zeta0 and w = nu / epsilon, plus its
// exact first and second u-derivatives and the small-u asymptotics.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bo2d/constants.hpp"

namespace bo2d {

// Thrown when an iterative solver exhausts its budget; carries the last
// bracket or scan window for diagnosis.
struct SolverError : std::runtime_error {
  SolverError(const std::string& what, double lo_, double hi_)
      : std::runtime_error(what), lo(lo_), hi(hi_) {}
  double lo;
  double hi;
};

// One point on the binding curve with both derivatives attached.
struct BindingPoint {
  double u = 0.0;    // dimensionless separation
  double w = 0.0;    // dimensionless binding, w > 1
  double dw = 0.0;   // dw/du, negative
  double d2w = 0.0;  // d^2w/du^2
};

// Solve ln w = K_0(w u) for the unique w in (1, inf).  The residual
// ln w - K_0(w u) is strictly increasing in w, so a doubling bracket plus a
// safeguarded Newton iteration is exact-safe.  tol bounds the residual and
// is clamped below at 1e-14.  Throws std::domain_error for u <= 0 and
// SolverError (with the last bracket) if the iteration cap is hit.
double solve_w(double u, double tol = 1e-13);

// solve_w plus the closed-form derivatives.
BindingPoint binding_point(double u, double tol = 1e-13);

// dw/du = -w^2 K_1(wu) / D with D = 1 + w u K_1(wu).
double dw_du(const BindingPoint& p);

// d^2w/du^2 = -w dw K_1(wu)/D - dw/u
//             + w^2 (u dw + w) (K_0(wu)/D) [1 - w u K_1(wu)/D].
double d2w_du2(const BindingPoint& p);

// Small-u law for w^2: order 0 gives 2/(u e^gamma), order 1 multiplies by
// (1 - (e^{-gamma}/4) u ln u).  Quantitative only for u < 0.2; evaluating
// outside that window is allowed (grid tabulation) but not meaningful.
double w_asymptotic(double u, int order);

// Fixed-point iteration for ln(xi e^gamma / 2) = -(1/4) xi e^{-gamma} x ln x
// starting from xi = 2 e^{-gamma}; returns the iterate after iters steps.
// Requires x |ln x| < 1; throws SolverError if the updates stop contracting.
double xi_iterate(double x, int iters);

// Logarithmic grid of n points on [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace bo2d
