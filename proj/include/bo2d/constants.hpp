// constants.hpp -- shared mathematical constants and the physical-parameter set.

#pragma once

#include <cmath>
#include <stdexcept>

namespace bo2d {

// Euler-Mascheroni constant to 20 digits; every e^gamma factor in the
// library is derived from this single definition.
inline constexpr double euler_gamma = 0.57721566490153286061;

inline constexpr double pi = 3.14159265358979323846;

// Masses, hbar and the one-center binding scale epsilon (epsilon^2 is the
// single-center binding energy).  All solvers work in dimensionless form,
// lengths in zeta0 and energies in epsilon^2; this struct owns the
// conversions at the boundary.
struct PhysicalParams {
  double m = 1.0;        // light mass
  double M = 1.0;        // heavy mass
  double hbar = 1.0;
  double epsilon = 1.0;  // sqrt(one-center binding energy)

  // Reduced convention hbar = epsilon = 2 m* = 1 at a given M/m ratio.
  // The individual masses follow from 1/m + 1/M = 2 and M/m = ratio.
  static PhysicalParams reduced(double mass_ratio) {
    if (!(mass_ratio >= 1.0))
      throw std::domain_error("PhysicalParams::reduced: mass ratio must be >= 1");
    PhysicalParams p;
    p.m = 0.5 * (1.0 + 1.0 / mass_ratio);
    p.M = 0.5 * (mass_ratio + 1.0);
    p.hbar = 1.0;
    p.epsilon = 1.0;
    return p;
  }

  void validate() const {
    if (!(m > 0.0) || !(M > 0.0) || !(hbar > 0.0) || !(epsilon > 0.0))
      throw std::domain_error("PhysicalParams: all parameters must be positive");
    if (M < m)
      throw std::domain_error("PhysicalParams: M must be >= m");
  }

  // reduced light-heavy mass, 1/m* = 1/m + 1/M
  double m_star() const { return 1.0 / (1.0 / m + 1.0 / M); }

  // light-particle length scale, the spread of the one-center bound state
  double zeta0() const { return hbar / (std::sqrt(2.0 * m_star()) * epsilon); }

  // Coulomb-like coupling of the induced heavy-heavy attraction
  double alpha() const {
    return 2.0 * hbar * epsilon / (std::sqrt(2.0 * m_star()) * std::exp(euler_gamma));
  }

  // Bohr-like radius of the heavy relative problem
  double z0() const { return hbar * hbar / (M * alpha()); }

  // M / 2m*, the large factor multiplying the spectrum
  double lambda_ratio() const { return M / (2.0 * m_star()); }

  // 2m* / M, the small factor carried by the induced 1/z^2 term
  double g() const { return 2.0 * m_star() / M; }
};

}  // namespace bo2d
