// specfun.cpp -- implementations of the special functions.

#include "bo2d/specfun.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "bo2d/constants.hpp"
#include "bo2d/reference_tables.hpp"

namespace bo2d {

namespace detail {

// Ascending series for K_0 and K_1, accurate for x < 2:
//   K_0(x) = -(ln(x/2) + gamma) I_0(x) + sum_{k>=1} (x^2/4)^k H_k / (k!)^2
//   K_1(x) = ln(x/2) I_1(x) + 1/x
//            - (x/4) sum_{k>=0} (H_k + H_{k+1} - 2 gamma) (x^2/4)^k / (k!(k+1)!)
// with H_k the harmonic numbers.
void bessel_k01_series(double x, double& k0, double& k1) {
  const double q = 0.25 * x * x;
  const double lh = std::log(0.5 * x);

  double i0 = 1.0, i1 = 1.0;        // I_1 accumulated without the x/2 factor
  double t0 = 1.0, t1 = 1.0;        // running series terms
  double s0 = 0.0;                  // sum for K_0
  double s1 = 1.0 - 2.0 * euler_gamma;  // k = 0 term of the K_1 sum
  double hk = 0.0;                  // H_k

  for (int k = 1; k < 200; ++k) {
    t0 *= q / (static_cast<double>(k) * k);
    t1 *= q / (static_cast<double>(k) * (k + 1));
    hk += 1.0 / k;
    const double hk1 = hk + 1.0 / (k + 1);
    i0 += t0;
    i1 += t1;
    s0 += t0 * hk;
    s1 += t1 * (hk + hk1 - 2.0 * euler_gamma);
    if (t0 < DBL_EPSILON * i0 && t1 < DBL_EPSILON * i1) break;
  }
  i1 *= 0.5 * x;

  k0 = -(lh + euler_gamma) * i0 + s0;
  k1 = lh * i1 + 1.0 / x - 0.25 * x * s1;
}

// Steed-style continued fraction for x >= 2 (CF2 at order mu = 0):
// evaluates K_0 and K_1 simultaneously from the confluent expansion of
// K_mu(x) = sqrt(pi/2x) e^{-x} / S.
void bessel_k01_cf(double x, double& k0, double& k1) {
  const double a1 = 0.25;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  double q = a1, c = a1, a = -a1;
  double s = 1.0 + q * delh;

  for (int i = 2; i < 10000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::fabs(dels / s) < DBL_EPSILON) break;
  }
  h = a1 * h;

  k0 = std::sqrt(pi / (2.0 * x)) * std::exp(-x) / s;
  k1 = k0 * (x + 0.5 - h) / x;
}

}  // namespace detail

double bessel_k(int order, double x) {
  if (order < 0 || order > 3)
    throw std::domain_error("bessel_k: order must be in 0..3");
  if (!(x > 0.0))
    throw std::domain_error("bessel_k: x must be positive");

  double k0, k1;
  if (x < 2.0)
    detail::bessel_k01_series(x, k0, k1);
  else
    detail::bessel_k01_cf(x, k0, k1);
  if (order == 0) return k0;
  if (order == 1) return k1;

  // upward recurrence K_{n+1} = K_{n-1} + (2n/x) K_n, stable for K
  const double k2 = k0 + (2.0 / x) * k1;
  if (order == 2) return k2;
  return k1 + (4.0 / x) * k2;
}

double bessel_k_small_x(int order, double x) {
  if (order < 0 || order > 3)
    throw std::domain_error("bessel_k_small_x: order must be in 0..3");
  if (!(x > 0.0 && x < 0.5))
    throw std::domain_error("bessel_k_small_x: valid only on 0 < x < 0.5");
  switch (order) {
    case 0:
      return -std::log(0.5 * x * std::exp(euler_gamma));
    case 1:
      return 1.0 / x + 0.5 * x * std::log(0.5 * x);
    case 2:
      return 2.0 / (x * x) - 0.5;
    default:
      return 8.0 / (x * x * x) - 1.0 / x;
  }
}

double log_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("log_gamma: x must be positive");

  // Lanczos approximation, g = 7, 9 coefficients
  static const double coef[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,     -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7};

  if (x < 0.5) {
    // reflection keeps the argument of the rational part above 0.5
    return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double a = coef[0];
  for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

double digamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("digamma: x must be positive");

  // shift to x >= 10 with psi(x) = psi(x+1) - 1/x
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // asymptotic series psi(x) ~ ln x - 1/2x - sum B_{2n} / (2n x^{2n})
  const double r = 1.0 / (x * x);
  const double series =
      r * (-1.0 / 12.0 +
           r * (1.0 / 120.0 +
                r * (-1.0 / 252.0 +
                     r * (1.0 / 240.0 +
                          r * (-1.0 / 132.0 + r * (691.0 / 32760.0))))));
  return acc + std::log(x) - 0.5 / x + series;
}

double trigamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("trigamma: x must be positive");

  // shift to x >= 10 with zeta(2,x) = zeta(2,x+1) + 1/x^2
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  // psi'(x) ~ 1/x + 1/2x^2 + sum B_{2n} / x^{2n+1}
  const double r = 1.0 / (x * x);
  const double series =
      r * (1.0 / 6.0 +
           r * (-1.0 / 30.0 +
                r * (1.0 / 42.0 +
                     r * (-1.0 / 30.0 +
                          r * (5.0 / 66.0 + r * (-691.0 / 2730.0))))));
  return acc + 1.0 / x + 0.5 * r + series / x;
}

double laguerre(int n, double alpha, double x) {
  if (n < 0)
    throw std::domain_error("laguerre: n must be nonnegative");
  if (!(alpha > -1.0))
    throw std::domain_error("laguerre: alpha must exceed -1");
  if (n == 0) return 1.0;

  // (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double lp1 = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

namespace {

template <typename F>
AccuracyReport measure(const char* name, F&& f, const double* xs,
                       const double* refs, int count) {
  AccuracyReport rep;
  rep.function = name;
  rep.test_point_count = count;
  for (int i = 0; i < count; ++i) {
    const double got = f(xs[i]);
    const double err = std::fabs(got - refs[i]) / std::fabs(refs[i]);
    if (err > rep.max_relative_error) rep.max_relative_error = err;
  }
  return rep;
}

}  // namespace

std::vector<AccuracyReport> accuracy_reports() {
  namespace ref = bo2d::reference;
  const int nb = static_cast<int>(sizeof(ref::bessel_x) / sizeof(double));
  const int ng = static_cast<int>(sizeof(ref::lgamma_x) / sizeof(double));
  const int nd = static_cast<int>(sizeof(ref::digamma_x) / sizeof(double));
  const int nt = static_cast<int>(sizeof(ref::trigamma_x) / sizeof(double));

  std::vector<AccuracyReport> out;
  out.push_back(measure("bessel_k0", [](double x) { return bessel_k(0, x); },
                        ref::bessel_x, ref::bessel_k0, nb));
  out.push_back(measure("bessel_k1", [](double x) { return bessel_k(1, x); },
                        ref::bessel_x, ref::bessel_k1, nb));
  out.push_back(measure("bessel_k2", [](double x) { return bessel_k(2, x); },
                        ref::bessel_x, ref::bessel_k2, nb));
  out.push_back(measure("bessel_k3", [](double x) { return bessel_k(3, x); },
                        ref::bessel_x, ref::bessel_k3, nb));

  // log_gamma(1) = 0 exactly; measure that point absolutely
  AccuracyReport lg;
  lg.function = "log_gamma";
  lg.test_point_count = ng;
  for (int i = 0; i < ng; ++i) {
    const double got = log_gamma(ref::lgamma_x[i]);
    const double scale = std::max(1.0, std::fabs(ref::lgamma_v[i]));
    const double err = std::fabs(got - ref::lgamma_v[i]) / scale;
    if (err > lg.max_relative_error) lg.max_relative_error = err;
  }
  out.push_back(lg);

  out.push_back(measure("digamma", [](double x) { return digamma(x); },
                        ref::digamma_x, ref::digamma_v, nd));
  out.push_back(measure("trigamma", [](double x) { return trigamma(x); },
                        ref::trigamma_x, ref::trigamma_v, nt));

  AccuracyReport lag;
  lag.function = "laguerre";
  const int nl = static_cast<int>(sizeof(ref::laguerre_x) / sizeof(double));
  lag.test_point_count = nl;
  for (int i = 0; i < nl; ++i) {
    const double got = laguerre(static_cast<int>(ref::laguerre_n[i]),
                                ref::laguerre_alpha[i], ref::laguerre_x[i]);
    const double err = std::fabs(got - ref::laguerre_v[i]) / std::fabs(ref::laguerre_v[i]);
    if (err > lag.max_relative_error) lag.max_relative_error = err;
  }
  out.push_back(lag);
  return out;
}

}  // namespace bo2d
