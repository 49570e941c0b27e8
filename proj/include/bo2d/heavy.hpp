// heavy.hpp -- the effective radial problem for the heavy relative
// coordinate: analytic Laguerre spectrum, an independent shooting solver,
// wavefunctions and ground-state expectation values.
//
// The radial equation in the scaled variable r = z / (z0 K) reads
//   [d^2/dr^2 + (1/r) d/dr - beta^2/r^2 + K/r - 1/4] R = 0,
// normalizable solutions force K = n + 1/2 + beta.

#pragma once

#include <functional>
#include <vector>

#include "bo2d/constants.hpp"

namespace bo2d {

struct SpectrumResult {
  int n = 0;
  double beta = 0.0;
  double K_analytic = 0.0;          // n + 1/2 + beta
  double K_shooting = 0.0;          // NaN until a shooting run fills it
  double energy_ratio = 0.0;        // delta E_n / epsilon^2 = -lambda e^{-2 gamma}/K^2
  double discrepancy = 0.0;         // |K_shooting - K_analytic|, NaN if not shot
};

// Analytic level; K_shooting and discrepancy are left NaN.
SpectrumResult energy_level(int n, const PhysicalParams& params, double beta2);

// Shooting eigenvalue: outward from r0 = 1e-6 on a Frobenius series
// r^beta (1 + a1 r + a2 r^2), inward from r_max on the decaying asymptote
// e^{-r/2} r^{K-1/2}, matched through a normalized Wronskian at r_mid.
// K brackets come from a scan; the root whose eigenfunction has exactly n
// interior nodes is returned.  Throws SolverError when the scan window
// contains no usable bracket.
double shoot_eigenvalue(int n, double beta2, double tol = 1e-10);

// energy_level plus the shooting cross-check.
SpectrumResult solve_level(int n, const PhysicalParams& params, double beta2,
                           double tol = 1e-10);

// Sampled radial wavefunction R_n(r) = C r^beta e^{-r/2} L_n^{2 beta}(r)
// with the closed-form normalization in the measure 2 pi z dz.
struct RadialWave {
  int n = 0;
  double beta = 0.0;
  double C = 0.0;            // closed-form normalization constant
  double scale = 0.0;        // z0 K(n): z = scale * r
  std::vector<double> r;
  std::vector<double> R;
  int nodes() const;         // interior sign changes of the samples
};

RadialWave radial_wavefunction(int n, double beta2, const PhysicalParams& params);

// Ground-state radial density in z is Gamma-distributed:
// p(z) dz = a^{2 beta + 2} z^{2 beta + 1} e^{-a z} / Gamma(2 beta + 2) dz.
double radial_scale_a(const PhysicalParams& params, double beta2);  // 2/(z0(1+2 beta))

// Closed-form ground-state expectations (dimensional z).
double expect_z(const PhysicalParams& params, double beta2);       // (beta+1)(1+2 beta) z0
double expect_z_over_z0(double beta2);
double expect_inv_z(const PhysicalParams& params, double beta2);   // a/(2 beta + 1)
double expect_log_z(const PhysicalParams& params, double beta2, double c);
double expect_log2_z(const PhysicalParams& params, double beta2, double c);
double expect_log_z_over_z(const PhysicalParams& params, double beta2, double c);

// Direct quadrature of a ground-state moment <f(z)>; the oracle for every
// closed form above.
double moment_quadrature(const PhysicalParams& params, double beta2,
                         const std::function<double(double)>& f,
                         double tol = 1e-12);

// <z> for level n by quadrature over the Laguerre density (used by the
// spectrum table; the paper-level closed form exists only for n = 0).
double expect_z_level(int n, const PhysicalParams& params, double beta2,
                      double tol = 1e-12);

}  // namespace bo2d
