// specfun.hpp -- self-contained special functions: modified Bessel K_0..K_3,
// log-gamma, digamma, Hurwitz zeta(2,.), generalized Laguerre polynomials.
// 64-bit arithmetic throughout, with accuracy verified against precomputed
// high-precision grids (see accuracy_reports).

#pragma once

#include <string>
#include <vector>

namespace bo2d {

// K_n(x) for n in 0..3, x > 0, to at least 12 significant digits.
// Power series below x = 2, continued-fraction evaluation above, upward
// recurrence for n = 2, 3.  Throws std::domain_error outside the domain.
double bessel_k(int order, double x);

// The leading plus first-correction small-argument forms,
//   K_0 ~ -ln(x e^gamma / 2)        K_1 ~ 1/x + (x/2) ln(x/2)
//   K_2 ~ 2/x^2 - 1/2               K_3 ~ 8/x^3 - 1/x
// valid on 0 < x < 0.5.  Used only for expansion cross-checks, never inside
// the exact evaluators.  Throws std::domain_error outside (0, 0.5).
double bessel_k_small_x(int order, double x);

// ln Gamma(x) for x > 0 (Lanczos approximation, g = 7, 9 coefficients).
double log_gamma(double x);

// psi(x) = d/dx ln Gamma(x) for x > 0 (recurrence shift plus Bernoulli
// asymptotics).
double digamma(double x);

// zeta(2, x) = sum_{k>=0} 1/(x+k)^2 = psi'(x) for x > 0.
double trigamma(double x);

// Generalized Laguerre polynomial L_n^alpha(x) by the stable three-term
// recurrence; n >= 0, alpha > -1.
double laguerre(int n, double alpha, double x);

// Worst relative error of one evaluator over its reference grid.
struct AccuracyReport {
  std::string function;
  double max_relative_error = 0.0;
  int test_point_count = 0;
};

// One report per function (k0..k3, log_gamma, digamma, trigamma, laguerre),
// each measured against 50-digit reference values.
std::vector<AccuracyReport> accuracy_reports();

namespace detail {
// The two evaluation branches for K_0 and K_1, exposed so tests can verify
// that they overlap to 1e-12 across the switchover at x = 2.
void bessel_k01_series(double x, double& k0, double& k1);
void bessel_k01_cf(double x, double& k0, double& k1);
}  // namespace detail

}  // namespace bo2d
