// effpot.hpp -- exact evaluation of every contribution to the averaged
// heavy-particle equation, numerical extraction of the small-u singular
// coefficients, and the assembled effective potential.
//
// All terms are dimensionless energies in units g epsilon^2 (g = 2m*/M),
// except the cross coefficient, which multiplies dPsi/du.  Everything is
// computed from the exact closed forms; the small-u expansions appear only
// as assertions in the tests.

#pragma once

#include <functional>

#include "bo2d/binding.hpp"
#include "bo2d/lightfield.hpp"

namespace bo2d {

// Every effective-potential contribution at one separation.
struct TermBreakdown {
  double u = 0.0;
  double t1b = 0.0;   // remainder of the w^2 subtraction, O(w^2)
  double t1c = 0.0;   // -(1/2)[dw/u + d2w] p1
  double t1d = 0.0;   // -dw^2 [p2/2 - A2 J]
  double t2 = 0.0;    // -(1/A) Laplacian A
  double t3a = 0.0;   // -(1/A)A' dw p1
  double t3b = 0.0;   // 2 (1/A)A' A2 pi u K_0(wu)
  double cross_coeff = 0.0;  // coefficient of dPsi/du; vanishing 1/u part
  double total() const { return t1b + t1c + t1d + t2 + t3a + t3b; }
};

// Term evaluators on precomputed state (grids, recomposition tests).
double term_1b(const LightState& s, const BindingPoint& p);
double term_1c(const LightState& s, const BindingPoint& p);
double term_1d(const LightState& s, const BindingPoint& p);
double term_2(const LightState& s, const BindingPoint& p);
double term_3a(const LightState& s, const BindingPoint& p);
double term_3b(const LightState& s, const BindingPoint& p);
double cross_term_coefficient(const LightState& s, const BindingPoint& p);

// Convenience single-u forms; each solves the binding curve internally.
double term_1b(double u);
double term_1c(double u);
double term_1d(double u);
double term_2(double u);
double term_3a(double u);
double term_3b(double u);
double cross_term_coefficient(double u);
TermBreakdown term_breakdown(double u, double tol = 1e-13);

// The three sub-brackets of the cross coefficient, exposed for testing:
// cross = -(two_logA + overlap_part + dw_p1); the three pieces cancel
// exactly because their sum is the u-derivative of the normalization
// integral, which is identically 1.
struct CrossTermParts {
  double two_logA = 0.0;       // 2 (1/A) dA/du
  double overlap_part = 0.0;   // A2 pi (-2 u K_0(wu))
  double dw_p1 = 0.0;          // dw * p1
};
CrossTermParts cross_term_parts(const LightState& s, const BindingPoint& p);

// Result of a small-u coefficient fit.
struct CoeffFit {
  int power = 2;            // target p in c / u^p
  bool include_log = true;  // log basis columns included
  double value = 0.0;       // extracted c
  double error = 0.0;       // window-shrink drift
  double window_lo = 0.0;
  double window_hi = 0.0;
  bool stable = false;      // drift below 1e-3 relative (or tiny absolutely)
};

// Least-squares fit of f(u) ~ c/u^p (+ log basis) on a log-spaced window.
// Rows are scaled by u^p, so for p = 2 the columns are {1, u ln u, u, u^2}:
// the u ln u column absorbs the (1/u) ln u contamination that the w^2 ~
// (2/u e^gamma)(1 + O(u ln u)) tail induces.  The window is then shrunk to
// its lower half (log scale) and the drift of c becomes the error estimate.
CoeffFit extract_coeff(const std::function<double(double)>& f, int power,
                       bool include_log, double window_lo, double window_hi,
                       int points = 40);

// Extracted centrifugal strength: 1/u^2 coefficient of the summed terms.
struct BetaSquaredResult {
  CoeffFit fit;                    // on [window_lo, window_hi]
  CoeffFit fit_alt;                // on the shifted second window
  double extracted = 0.0;          // fit.value
  double claimed = 5.0 / 12.0;     // the stated value for comparison
  bool stable = false;             // both fits stable and mutually consistent
};
BetaSquaredResult beta_squared(double window_lo = 1e-3, double window_hi = 1e-2);

// Leading effective potential -2/(e^gamma u) + g beta2 / u^2, in epsilon^2.
double v_eff(double u, double beta2, double g);

}  // namespace bo2d
