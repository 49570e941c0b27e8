// verify.cpp -- live recomputation of every cross-module invariant, plus
// the adjudication findings where the construction's own numbers disagree
// with the stated ones.

#include "bo2d/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bo2d/binding.hpp"
#include "bo2d/effpot.hpp"
#include "bo2d/heavy.hpp"
#include "bo2d/lightfield.hpp"
#include "bo2d/pert.hpp"
#include "bo2d/quadrature.hpp"
#include "bo2d/specfun.hpp"

namespace bo2d {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

struct Suite {
  std::vector<CheckResult> checks;
  void add(const std::string& name, double measured, double threshold,
           const std::string& detail) {
    checks.push_back({name, measured <= threshold, measured, threshold, detail});
  }
};

void check_specfun(Suite& s) {
  double worst = 0.0;
  int points = 0;
  for (const AccuracyReport& r : accuracy_reports()) {
    worst = std::max(worst, r.max_relative_error);
    points += r.test_point_count;
  }
  s.add("specfun-accuracy", worst, 1e-12,
        "worst tabulated relative error over " + std::to_string(points) +
            " reference points");

  const std::vector<double> grid = log_grid(1e-3, 30.0, 200);
  double rec = 0.0, ident = 0.0, wron = 0.0;
  for (double x : grid) {
    const double k0 = bessel_k(0, x), k1 = bessel_k(1, x), k2 = bessel_k(2, x);
    rec = std::max(rec, std::abs(k2 - k0 - 2.0 * k1 / x) / k2);
    ident = std::max(ident, std::abs(x * k0 - x * k2 + 2.0 * k1) / (2.0 * k1));
    wron = std::max(wron, -(k0 * k2 - k1 * k1));
  }
  s.add("bessel-recurrence-closure", rec, 1e-12,
        "max relative defect of K2 = K0 + (2/x) K1 on the log grid");
  s.add("bessel-subtraction-identity", ident, 1e-12,
        "max relative defect of x K0 - x K2 = -2 K1");
  s.add("bessel-wronskian-positive", wron, 0.0,
        "largest violation of K0 K2 - K1^2 > 0 (0 means none)");

  double dpsi = 0.0;
  const double h = 1e-4;
  for (double x : {0.7, 1.3, 2.0, 3.7, 8.0}) {
    const double fd = (digamma(x + h) - digamma(x - h)) / (2.0 * h);
    dpsi = std::max(dpsi, std::abs(fd - trigamma(x)));
  }
  s.add("digamma-trigamma-derivative", dpsi, 1e-6,
        "centered difference of digamma vs trigamma, step 1e-4");
}

void check_binding(Suite& s, bool corrupt) {
  const std::vector<double> grid = log_grid(1e-3, 20.0, 200);
  double resid = 0.0, mono = 0.0;
  double w_prev = 0.0;
  bool first = true;
  for (double u : grid) {
    const double w = solve_w(u);
    resid = std::max(resid, std::abs(std::log(w) - bessel_k(0, w * u)));
    if (!first) mono = std::max(mono, w - w_prev);
    w_prev = w;
    first = false;
  }
  s.add("binding-residual", resid, corrupt ? 1e-30 : 1e-12,
        corrupt ? "selftest-corrupted threshold (deliberately unattainable)"
                : "max |ln w - K0(wu)| over 200 log-spaced u in [1e-3, 20]");
  s.add("binding-monotonic", mono, 0.0,
        "largest increase of w along increasing u (0 means strictly decreasing)");
  s.add("binding-far-limit", solve_w(20.0) - 1.0, 1e-8,
        "w(20) - 1, isolated-center limit");
  {
    const double u = 1e-3;
    const double w = solve_w(u);
    s.add("binding-near-asymptote",
          std::abs(w * w * u * std::exp(euler_gamma) / 2.0 - 1.0), 0.02,
          "w^2 u e^gamma/2 at u = 1e-3 against 1");
  }

  double dev1 = 0.0, dev2 = 0.0;
  for (double u : log_grid(0.05, 5.0, 20)) {
    const BindingPoint p = binding_point(u);
    const double h1 = 1e-6;
    const double fd1 = (solve_w(u + h1) - solve_w(u - h1)) / (2.0 * h1);
    dev1 = std::max(dev1, std::abs(fd1 - p.dw) / std::abs(p.dw));
    const double h2 = 1e-4;
    const double fd2 =
        (solve_w(u + h2) - 2.0 * p.w + solve_w(u - h2)) / (h2 * h2);
    dev2 = std::max(dev2, std::abs(fd2 - p.d2w) / std::abs(p.d2w));
  }
  s.add("binding-derivative-fd", dev1, 1e-6,
        "dw/du vs centered difference (step 1e-6) on u in [0.05, 5]");
  s.add("binding-second-derivative-fd", dev2, 1e-4,
        "d2w/du2 vs second difference (step 1e-4) on u in [0.05, 5]");

  const BindingPoint p = binding_point(1e-3);
  s.add("binding-leading-derivative-law",
        std::abs(p.u * p.dw / p.w + 0.5), 1e-2,
        "u w'/w against -1/2 at u = 1e-3");
  s.add("binding-leading-curvature-law",
        std::abs(p.u * p.u * p.d2w / p.w - 0.75), 1e-2,
        "u^2 w''/w against +3/4 at u = 1e-3");
}

void check_lightfield(Suite& s, double tol) {
  QuadSpec spec;
  spec.tol = tol;

  double norm_dev = 0.0;
  for (double u : {0.5, 1.0}) {
    const LightState st = light_state(u);
    const QuadResult q = quad2d(
        [&](double x1, double x2) {
          const double p = phi(x1, x2, st);
          return p * p;
        },
        st.u, st.w, spec);
    norm_dev = std::max(norm_dev, std::abs(q.value - 1.0));
  }
  s.add("light-normalization-quadrature", norm_dev, 1e-8,
        "plane integral of phi^2 against 1 at u in {0.5, 1}");

  double ov_dev = 0.0, gr_dev = 0.0;
  for (double u : {0.5, 2.0}) {
    const LightState st = light_state(u);
    const QuadResult ov = quad2d(
        [&](double x1, double x2) {
          const double rp = std::hypot(x1 - st.u / 2.0, x2);
          const double rm = std::hypot(x1 + st.u / 2.0, x2);
          return bessel_k(0, st.w * rp) * bessel_k(0, st.w * rm);
        },
        st.u, st.w, spec);
    ov_dev = std::max(ov_dev, std::abs(ov.value - overlap_integral(st)));
    const QuadResult gr = quad2d(
        [&](double x1, double x2) {
          const double rp = std::hypot(x1 - st.u / 2.0, x2);
          const double rm = std::hypot(x1 + st.u / 2.0, x2);
          const double d = rp * bessel_k(1, st.w * rp) + rm * bessel_k(1, st.w * rm);
          return d * d;
        },
        st.u, st.w, spec);
    gr_dev = std::max(gr_dev, std::abs(gr.value - grad_nu_integral(st)));
  }
  s.add("light-overlap-quadrature", ov_dev, 1e-7,
        "closed-form orbital overlap vs 2D quadrature at u in {0.5, 2}");
  s.add("light-gradient-quadrature", gr_dev, 1e-7,
        "closed-form w-gradient integral vs 2D quadrature at u in {0.5, 2}");
}

void check_effpot(Suite& s) {
  const CoeffFit f1c = extract_coeff([](double u) { return term_1c(u); }, 2,
                                     true, 1e-3, 1e-2);
  const CoeffFit f2 = extract_coeff([](double u) { return term_2(u); }, 2,
                                    true, 1e-3, 1e-2);
  const CoeffFit f3a = extract_coeff([](double u) { return term_3a(u); }, 2,
                                     true, 1e-3, 1e-2);
  s.add("effpot-coefficient-1c", std::abs(f1c.value - 0.25), 1e-3,
        "extracted 1/u^2 coefficient of the curvature term against +1/4");
  s.add("effpot-coefficient-2", std::abs(f2.value + 0.25), 1e-3,
        "extracted 1/u^2 coefficient of the Laplacian term against -1/4");
  s.add("effpot-coefficient-3a", std::abs(f3a.value - 0.5), 1e-3,
        "extracted 1/u^2 coefficient of the first gradient term against +1/2");
  s.add("effpot-fit-stability",
        (f1c.stable && f2.stable && f3a.stable) ? 0.0 : 1.0, 0.0,
        "window-shrink drift below threshold for the three anchored fits");

  const BetaSquaredResult bs = beta_squared();
  s.add("effpot-window-consistency",
        std::abs(bs.fit.value - bs.fit_alt.value), 1e-3,
        "total 1/u^2 coefficient between windows [1e-3,1e-2] and [3e-3,3e-2]");

  double worst = 0.0, prev = 0.0;
  bool monotone = true;
  bool first = true;
  for (double u : {1e-1, 1e-2, 1e-3}) {
    const double v = std::abs(u * cross_term_coefficient(u));
    worst = std::max(worst, v);
    if (!first && v > prev + 1e-12) monotone = false;
    prev = v;
    first = false;
  }
  s.add("cross-term-no-pole", worst, 1e-10,
        "max |u * cross coefficient| on u in {1e-1, 1e-2, 1e-3}");
  s.add("cross-term-decreasing", monotone ? 0.0 : 1.0, 0.0,
        "|u * cross| nonincreasing along the sequence (within 1e-12)");

  s.add("term-1b-subleading", std::abs(term_1b(1e-3)) * 1e-6, 1e-3,
        "t1b u^2 at u = 1e-3: the remainder term carries no 1/u^2 part");
}

void check_heavy(Suite& s, const PhysicalParams& params, double beta2) {
  double worst = 0.0;
  for (const auto& [n, b2] : std::vector<std::pair<int, double>>{
           {0, beta2}, {1, beta2}, {0, 1.0 / 12.0}}) {
    const double beta = std::sqrt(b2);
    worst = std::max(worst,
                     std::abs(shoot_eigenvalue(n, b2) - (n + 0.5 + beta)));
  }
  s.add("shooting-vs-analytic", worst, 1e-6,
        "shooting eigenvalue against n + 1/2 + beta for three (n, beta^2) pairs");
  s.add("shooting-coulomb-control", std::abs(shoot_eigenvalue(0, 0.0) - 0.5),
        1e-6, "beta = 0 reduces to the 2D Coulomb value K = 1/2");

  int node_defect = 0;
  for (int n : {0, 1, 2}) {
    const RadialWave wav = radial_wavefunction(n, beta2, params);
    node_defect += std::abs(wav.nodes() - n);
  }
  s.add("wavefunction-nodes", node_defect, 0.0,
        "interior sign changes of sampled R_n equal n for n in {0, 1, 2}");

  double norm_dev = 0.0;
  for (int n : {0, 1}) {
    const RadialWave wav = radial_wavefunction(n, beta2, params);
    const double beta = std::sqrt(beta2);
    const QuadResult q = integrate_gk(
        [&](double r) {
          const double L = laguerre(n, 2.0 * beta, r);
          return std::exp((2.0 * beta + 1.0) * std::log(r) - r) * L * L;
        },
        0.0, 80.0 + 10.0 * n, 1e-13);
    const double total =
        2.0 * pi * wav.scale * wav.scale * wav.C * wav.C * q.value;
    norm_dev = std::max(norm_dev, std::abs(total - 1.0));
  }
  s.add("normalization-closed-vs-quadrature", norm_dev, 1e-10,
        "closed-form C against the quadrature norm for n in {0, 1}");

  const double zq = moment_quadrature(params, beta2, [](double z) { return z; });
  const double zc = expect_z(params, beta2);
  s.add("expect-z-quadrature", std::abs(zq - zc) / zc, 1e-10,
        "<z> closed form against direct quadrature (relative)");
  s.add("expect-z-value", std::abs(expect_z_over_z0(beta2) - 3.7698), 1e-3,
        "<z>/z0 = (beta+1)(1+2 beta) against 3.7698 at beta^2 = 5/12");

  double scale_dev = 0.0;
  double ref = 0.0;
  bool first = true;
  for (double ratio : {1e2, 1e3, 1e4}) {
    const PhysicalParams p = PhysicalParams::reduced(ratio);
    const double v = expect_z(p, beta2) / p.zeta0() / p.g();
    if (first) {
      ref = v;
      first = false;
    } else {
      scale_dev = std::max(scale_dev, std::abs(v / ref - 1.0));
    }
  }
  s.add("expect-z-mass-scaling", scale_dev, 1e-12,
        "<z>/zeta0 divided by 2m*/M constant across M/m in {1e2, 1e3, 1e4}");

  double energy_dev = 0.0;
  ref = 0.0;
  first = true;
  for (double ratio : {1e2, 1e3, 1e4}) {
    const PhysicalParams p = PhysicalParams::reduced(ratio);
    const double v = energy_level(0, p, beta2).energy_ratio * p.g();
    if (first) {
      ref = v;
      first = false;
    } else {
      energy_dev = std::max(energy_dev, std::abs(v / ref - 1.0));
    }
  }
  s.add("energy-mass-scaling", energy_dev, 1e-12,
        "delta E_0 (2m*/M) independent of the mass ratio");
}

void check_pert(Suite& s, const PhysicalParams& params, double beta2,
                double tol) {
  const std::vector<CorrectionReport> reps =
      corrections_report(params, beta2, std::min(tol, 1e-11));
  double worst = 0.0;
  for (const CorrectionReport& r : reps) {
    worst = std::max(worst, std::abs(r.closed_form - r.quadrature) /
                                std::max(1.0, std::abs(r.closed_form)));
  }
  s.add("corrections-closed-vs-quadrature", worst, 1e-9,
        "all six corrections against their quadrature twins");

  double E0 = std::abs(energy_level(0, params, beta2).energy_ratio);
  auto mag = [&](const std::string& label) {
    for (const CorrectionReport& r : reps)
      if (r.label == label) return std::abs(r.closed_form);
    return 0.0;
  };
  int violations = 0;
  if (!(mag("c") < mag("a1"))) ++violations;
  if (!(mag("a1") < mag("b"))) ++violations;
  if (!(mag("b") < E0)) ++violations;
  if (!(mag("binding_log") < E0)) ++violations;
  s.add("corrections-hierarchy", violations, 0.0,
        "|c| < |a1| < |b| < |E0| and |binding_log| < |E0| at the default ratio");

  const double c = log_scale_c(params);
  const double lq = moment_quadrature(
      params, beta2, [&](double z) { return std::log(c * z); }, 1e-12);
  const double l2q = moment_quadrature(
      params, beta2,
      [&](double z) {
        const double lg = std::log(c * z);
        return lg * lg;
      },
      1e-12);
  const double beta = std::sqrt(beta2);
  s.add("log-variance-identity",
        std::abs(l2q - lq * lq - trigamma(2.0 * beta + 2.0)), 1e-10,
        "<ln^2> - <ln>^2 against the Hurwitz zeta value, both by quadrature");
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  Suite s;
  const PhysicalParams params = PhysicalParams::reduced(options.mass_ratio);

  check_specfun(s);
  check_binding(s, options.corrupt_selftest);
  check_lightfield(s, std::max(options.tol, 1e-10));
  check_effpot(s);
  check_heavy(s, params, options.beta2);
  check_pert(s, params, options.beta2, options.tol);

  report.checks = std::move(s.checks);
  report.all_pass = true;
  for (const CheckResult& c : report.checks) report.all_pass &= c.pass;

  // Adjudication findings: values this construction fixes on its own,
  // reported against the stated ones.
  const BetaSquaredResult bs = beta_squared();
  const CoeffFit f1d = extract_coeff([](double u) { return term_1d(u); }, 2,
                                     true, 1e-3, 1e-2);
  report.findings.push_back(
      {"centrifugal-coefficient", bs.extracted, bs.claimed,
       "total 1/u^2 coefficient extracted from the exact terms is " +
           fmt(bs.extracted) + " (windows agree to " +
           fmt(std::abs(bs.fit.value - bs.fit_alt.value)) +
           "), against the stated 5/12 = " + fmt(bs.claimed) +
           "; the gradient-squared piece extracts to " + fmt(f1d.value) +
           " where -1/12 is stated, accounting exactly for the difference"});

  const double beta = std::sqrt(options.beta2);
  const double K0 = 0.5 + beta;
  report.findings.push_back(
      {"ground-state-energy-factor", 4.0, 1.0,
       "the n = 0 value of the level formula is -lambda e^{-2 gamma}/(1/2 + "
       "beta)^2 in epsilon^2 units; the separately stated ground-state line "
       "carries 1/(1+2 beta)^2 = 1/" +
           fmt((1.0 + 2.0 * beta) * (1.0 + 2.0 * beta)) +
           " and is exactly 4 times smaller, since (1/2 + beta)^2 = (1 + 2 "
           "beta)^2/4 with K(0) = " +
           fmt(K0)});

  report.findings.push_back(
      {"bohr-radius-ratio", std::exp(euler_gamma) / 2.0, 1.0,
       "z0 derived from alpha gives z0/zeta0 = (e^gamma/2)(2m*/M); the "
       "shortcut z0 = (2m*/M) zeta0 misses the factor e^gamma/2 = " +
           fmt(std::exp(euler_gamma) / 2.0)});

  report.findings.push_back(
      {"cross-term-constant", std::abs(cross_term_coefficient(1e-3)), 0.0,
       "the undetermined constant in the first-derivative coefficient "
       "evaluates to zero: the exact coefficient is a cancellation and "
       "|coefficient| at u = 1e-3 is " +
           fmt(std::abs(cross_term_coefficient(1e-3)))});

  return report;
}

}  // namespace bo2d
