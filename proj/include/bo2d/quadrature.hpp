// quadrature.hpp -- adaptive 1D Gauss-Kronrod integration shared by the 2D
// oracle, the radial moment integrals and the verification suite.

#pragma once

#include <functional>

namespace bo2d {

struct QuadResult {
  double value = 0.0;
  double error_bound = 0.0;  // accumulated local error estimates
  bool converged = true;
  long evaluations = 0;
};

// Integrate f over [a, b] to absolute tolerance tol_abs with adaptive
// bisection on the 7-15 Gauss-Kronrod pair.  Deterministic: intervals are
// processed depth-first, left to right, and the final sum is accumulated in
// that fixed order.  max_intervals caps the subdivision count; on hitting
// the cap the best estimate is returned with converged = false and the
// error bound still valid.
QuadResult integrate_gk(const std::function<double(double)>& f, double a,
                        double b, double tol_abs, int max_intervals = 4000);

}  // namespace bo2d
