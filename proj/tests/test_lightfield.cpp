// test_lightfield.cpp -- closed-form light-particle integrals against the
// frozen values and the independent 2D quadrature oracle; the w-derivative
// combinations p1, p2 and the logA derivatives against finite differences.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bo2d/binding.hpp"
#include "bo2d/constants.hpp"
#include "bo2d/lightfield.hpp"
#include "bo2d/specfun.hpp"
#include "oracle_values.hpp"

using namespace bo2d;

namespace {
double rel(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

// A2 as an explicit function of (w, u), off the binding curve; used to
// difference p1 and p2 in w at fixed u.
double a2_of(double w, double u) {
  const double d = 1.0 + w * u * bessel_k(1, w * u);
  return w * w / (2.0 * pi * d);
}
}  // namespace

TEST_CASE("light_state reproduces the frozen w and A2 columns") {
  constexpr int n = sizeof(oracle::light_u) / sizeof(double);
  for (int i = 0; i < n; ++i) {
    const LightState s = light_state(oracle::light_u[i]);
    INFO("u = ", oracle::light_u[i]);
    CHECK(rel(s.w, oracle::light_w[i]) <= 1e-13);
    CHECK(rel(s.A2, oracle::light_A2[i]) <= 1e-12);
  }
}

TEST_CASE("normalization identity 2 A2 (pi / w^2) D = 1 is algebraically exact") {
  for (double u : {0.05, 0.3, 1.0, 4.0, 15.0}) {
    const LightState s = light_state(u);
    CHECK(std::fabs(2.0 * s.A2 * (pi / (s.w * s.w)) * s.D - 1.0) <= 1e-15);
  }
}

TEST_CASE("overlap and gradient integrals hit the frozen values") {
  constexpr int n = sizeof(oracle::light_u) / sizeof(double);
  for (int i = 0; i < n; ++i) {
    const LightState s = light_state(oracle::light_u[i]);
    INFO("u = ", oracle::light_u[i]);
    CHECK(rel(overlap_integral(s), oracle::light_overlap[i]) <= 1e-12);
    CHECK(rel(grad_nu_integral(s), oracle::light_grad_integral[i]) <= 1e-12);
  }
}

TEST_CASE("closed forms against the 2D quadrature oracle") {
  QuadSpec spec;
  spec.tol = 1e-10;
  for (double u : {0.2, 1.0}) {
    const LightState s = light_state(u);
    const QuadResult ov = quad2d(
        [&](double x1, double x2) {
          const double rp = std::hypot(x1 - s.u / 2.0, x2);
          const double rm = std::hypot(x1 + s.u / 2.0, x2);
          return bessel_k(0, s.w * rp) * bessel_k(0, s.w * rm);
        },
        s.u, s.w, spec);
    CHECK(ov.converged);
    CHECK(std::fabs(ov.value - overlap_integral(s)) <= 1e-7);

    const QuadResult gr = quad2d(
        [&](double x1, double x2) {
          const double rp = std::hypot(x1 - s.u / 2.0, x2);
          const double rm = std::hypot(x1 + s.u / 2.0, x2);
          const double d = rp * bessel_k(1, s.w * rp) + rm * bessel_k(1, s.w * rm);
          return d * d;
        },
        s.u, s.w, spec);
    CHECK(gr.converged);
    CHECK(std::fabs(gr.value - grad_nu_integral(s)) <= 1e-7);
  }
}

TEST_CASE("phi is normalized on the plane") {
  QuadSpec spec;
  spec.tol = 1e-10;
  for (double u : {0.5, 2.0}) {
    const LightState s = light_state(u);
    const QuadResult q = quad2d(
        [&](double x1, double x2) {
          const double p = phi(x1, x2, s);
          return p * p;
        },
        s.u, s.w, spec);
    CHECK(q.converged);
    CHECK(std::fabs(q.value - 1.0) <= 1e-8);
  }
}

TEST_CASE("quad2d reproduces the one-center norm pi / w^2") {
  // integral of K0(w r)^2 over the plane; the integrand is centered on one
  // orbital only, so this exercises the polar frames off the midline.
  QuadSpec spec;
  spec.tol = 1e-10;
  const LightState s = light_state(1.0);
  const QuadResult q = quad2d(
      [&](double x1, double x2) {
        const double rp = std::hypot(x1 - s.u / 2.0, x2);
        return bessel_k(0, s.w * rp) * bessel_k(0, s.w * rp);
      },
      s.u, s.w, spec);
  CHECK(q.converged);
  CHECK(std::fabs(q.value - pi / (s.w * s.w)) <= 1e-8);
}

TEST_CASE("phi matches its defining combination and diverges only at centers") {
  const LightState s = light_state(0.8);
  const double x1 = 0.3, x2 = -0.4;
  const double rp = std::hypot(x1 - s.u / 2.0, x2);
  const double rm = std::hypot(x1 + s.u / 2.0, x2);
  const double want =
      std::sqrt(s.A2) * (bessel_k(0, s.w * rp) + bessel_k(0, s.w * rm));
  CHECK(rel(phi(x1, x2, s), want) <= 1e-14);
  CHECK_THROWS_AS(phi(s.u / 2.0, 0.0, s), std::domain_error);
  CHECK_THROWS_AS(phi_grad(-s.u / 2.0, 0.0, s), std::domain_error);
}

TEST_CASE("phi_grad against centered differences") {
  const LightState s = light_state(1.2);
  const double h = 1e-6;
  for (double x1 : {0.4, -0.9}) {
    const double x2 = 0.35;
    const auto g = phi_grad(x1, x2, s);
    const double fd1 = (phi(x1 + h, x2, s) - phi(x1 - h, x2, s)) / (2.0 * h);
    const double fd2 = (phi(x1, x2 + h, s) - phi(x1, x2 - h, s)) / (2.0 * h);
    CHECK(std::fabs(g[0] - fd1) <= 1e-6);
    CHECK(std::fabs(g[1] - fd2) <= 1e-6);
  }
}

TEST_CASE("p1 and p2 equal the frozen values and w-differences of A^-2") {
  const LightState s = light_state(oracle::p_u);
  CHECK(rel(p1(s), oracle::p1_value) <= 1e-12);
  CHECK(rel(p2(s), oracle::p2_value) <= 1e-12);

  // p1 = A2 d/dw (1/A2), p2 = A2 d^2/dw^2 (1/A2), at fixed u.
  const double h = 1e-5;
  const double u = s.u, w = s.w;
  const double f0 = 1.0 / a2_of(w, u);
  const double fp = 1.0 / a2_of(w + h, u);
  const double fm = 1.0 / a2_of(w - h, u);
  CHECK(std::fabs(s.A2 * (fp - fm) / (2.0 * h) - p1(s)) <= 1e-6);
  CHECK(std::fabs(s.A2 * (fp - 2.0 * f0 + fm) / (h * h) - p2(s)) <= 1e-4);
}

TEST_CASE("logA derivatives: frozen values, parts closure, u-differences") {
  constexpr int n = sizeof(oracle::logA_u) / sizeof(double);
  for (int i = 0; i < n; ++i) {
    const double u = oracle::logA_u[i];
    const BindingPoint p = binding_point(u);
    const LightState s = light_state(p);
    INFO("u = ", u);
    CHECK(rel(logA_first_derivative(s, p), oracle::logA_first[i]) <= 1e-12);
    CHECK(rel(logA_laplacian(s, p), oracle::logA_laplacian[i]) <= 1e-11);

    const LogALaplacianParts parts = logA_laplacian_parts(s, p);
    CHECK(rel(parts.total(), logA_laplacian(s, p)) <= 1e-14);

    // (1/A) dA/du = (1/2) d ln A2 / du along the binding curve.
    const double h = 1e-6;
    const double fd_first = (std::log(light_state(u + h).A2) -
                             std::log(light_state(u - h).A2)) / (4.0 * h);
    CHECK(std::fabs(fd_first - logA_first_derivative(s, p)) <= 1e-6);

    // (1/A)A'' = (ln A)'' + ((ln A)')^2; add the radial piece for the
    // 2D Laplacian combination.
    const double h2 = 1e-4;
    const double la0 = 0.5 * std::log(light_state(u).A2);
    const double lap = 0.5 * std::log(light_state(u + h2).A2);
    const double lam = 0.5 * std::log(light_state(u - h2).A2);
    const double d1 = (lap - lam) / (2.0 * h2);
    const double d2 = (lap - 2.0 * la0 + lam) / (h2 * h2);
    const double fd_lap = d2 + d1 * d1 + d1 / u;
    CHECK(std::fabs(fd_lap - logA_laplacian(s, p)) <= 1e-5);
  }
}

TEST_CASE("state-and-point evaluators reject mismatched arguments") {
  const LightState s = light_state(1.0);
  BindingPoint p = binding_point(1.0);
  p.w = 2.0;  // no longer on the curve
  CHECK_THROWS_AS(logA_first_derivative(s, p), std::domain_error);
  CHECK_THROWS_AS(logA_laplacian(s, p), std::domain_error);
  CHECK_THROWS_AS(light_state(0.0), std::domain_error);
}

TEST_CASE("quad2d flags its domain errors and convergence honestly") {
  QuadSpec spec;
  spec.tol = 1e-10;
  CHECK_THROWS_AS(
      quad2d([](double, double) { return 0.0; }, -1.0, 1.0, spec),
      std::domain_error);
  spec.subdivision_limit = 1;
  const LightState s = light_state(1.0);
  const QuadResult q = quad2d(
      [&](double x1, double x2) {
        const double p = phi(x1, x2, s);
        return p * p;
      },
      s.u, s.w, spec);
  CHECK(!q.converged);
}
