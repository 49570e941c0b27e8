// pert.hpp -- first-order perturbative corrections to the heavy-sector
// ground state: closed forms built from the Gamma-density moments, plus
// direct-quadrature twins that confirm each integration by parts.
//
// All values are returned in units of epsilon^2.  The logarithm scale is
// c = sqrt(2 m*) epsilon e^gamma / (2 hbar), i.e. c zeta0 = e^gamma / 2,
// and is recorded in every report because constant terms inside logs are
// ambiguous at this order.

#pragma once

#include <string>
#include <vector>

#include "bo2d/constants.hpp"

namespace bo2d {

struct CorrectionReport {
  std::string label;       // binding_log, a1, b, c, mixed1, mixed2
  double closed_form = 0;  // units epsilon^2
  double quadrature = 0;   // independent integral of the same quantity
  std::string order_tag;   // leading order in (m*/M, ln(M/m*))
  double scale_c = 0;      // scale used inside ln(c z)
};

// Scale inside every logarithm: e^gamma / (2 zeta0).
double log_scale_c(const PhysicalParams& params);

// <(1/(2 e^{2 gamma})) ln(c z)>; behaves as -(1/(2 e^{2 gamma})) ln(M/m*)
// at large mass ratio.
double binding_log_correction(const PhysicalParams& params, double beta2);

// (2m*/M) <(2/e^gamma) zeta0 / z> = 8 / (e^{2 gamma} (1+2 beta)^2),
// independent of the mass ratio.
double expect_a1(const PhysicalParams& params, double beta2);

// (2m*/M) <(1/e^gamma) zeta0 ln(c z)/z>; grows like -ln(M/m*) because the
// 1/z moment carries a compensating M.
double expect_b(const PhysicalParams& params, double beta2);

// (2m*/M) <(1/e^{2 gamma}) ln^2(c z)>; suppressed by the mass ratio.
double expect_c(const PhysicalParams& params, double beta2);

// Mixed gradient, first part: -(2m*/M)(1/(2 e^gamma)) zeta0
// (<1/z> + <ln(c z)/z>), equal by parts to an integral over z d(Psi^2)/dz.
double mixed_gradient_first(const PhysicalParams& params, double beta2);

// Mixed gradient, second part:
// (2m*/M)(1/(4 e^{2 gamma})) (<ln(c z)> + <ln^2(c z)>).
double mixed_gradient_second(const PhysicalParams& params, double beta2);

// Direct pre-integration-by-parts forms (quadrature of z-weighted
// derivatives of the density); used as the quadrature twins for the mixed
// terms.  The boundary terms vanish because beta > 0 kills the origin and
// the exponential kills infinity.
double mixed_gradient_first_direct(const PhysicalParams& params, double beta2,
                                   double tol = 1e-12);
double mixed_gradient_second_direct(const PhysicalParams& params, double beta2,
                                    double tol = 1e-12);

// Anticommutator correction <P'(z)/2> for the unsymmetrized first-order
// operator P(z) d/dz with, in zeta0 length units,
//   P(z) = (2m*/M)(1/e^gamma) ln(c z) - (2m*/M)(1/(4 e^{2 gamma})) z ln^2(c z),
// computed by quadrature over the ground-state density.  Diagnostic only.
double symmetrization_diagnostic(const PhysicalParams& params, double beta2,
                                 double tol = 1e-12);

// All six corrections with closed form, quadrature twin and order tag.
std::vector<CorrectionReport> corrections_report(const PhysicalParams& params,
                                                 double beta2,
                                                 double tol = 1e-12);

}  // namespace bo2d
