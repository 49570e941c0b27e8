// test_pert.cpp -- the six first-order corrections: closed forms against
// frozen values and quadrature twins, the integration-by-parts identities,
// the order hierarchy in the mass ratio, and the log-variance identity.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "bo2d/constants.hpp"
#include "bo2d/heavy.hpp"
#include "bo2d/pert.hpp"
#include "bo2d/specfun.hpp"
#include "oracle_values.hpp"

using namespace bo2d;

namespace {
constexpr double beta2_paper = 5.0 / 12.0;

double rel(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

const PhysicalParams& params_1000() {
  static const PhysicalParams p =
      PhysicalParams::reduced(oracle::corr_mass_ratio);
  return p;
}
}  // namespace

TEST_CASE("the log scale obeys c zeta0 = e^gamma / 2") {
  for (double ratio : {1e2, 1e3, 1e4}) {
    const PhysicalParams p = PhysicalParams::reduced(ratio);
    CHECK(rel(log_scale_c(p) * p.zeta0(), std::exp(euler_gamma) / 2.0) <=
          1e-15);
  }
}

TEST_CASE("closed forms reproduce the frozen corrections at M/m = 1000") {
  const PhysicalParams& p = params_1000();
  CHECK(rel(binding_log_correction(p, beta2_paper), oracle::corr_binding_log) <=
        1e-12);
  CHECK(rel(expect_a1(p, beta2_paper), oracle::corr_a1) <= 1e-12);
  CHECK(rel(expect_b(p, beta2_paper), oracle::corr_b) <= 1e-12);
  CHECK(rel(expect_c(p, beta2_paper), oracle::corr_c) <= 1e-12);
  CHECK(rel(mixed_gradient_first(p, beta2_paper), oracle::corr_mixed1) <=
        1e-12);
  CHECK(rel(mixed_gradient_second(p, beta2_paper), oracle::corr_mixed2) <=
        1e-12);
  CHECK(rel(symmetrization_diagnostic(p, beta2_paper),
            oracle::corr_symmetrization) <= 1e-10);
}

TEST_CASE("every report pairs its closed form with a quadrature twin") {
  const std::vector<CorrectionReport> reps =
      corrections_report(params_1000(), beta2_paper, 1e-12);
  REQUIRE(reps.size() == 6);
  const char* want_labels[] = {"binding_log", "a1", "b", "c", "mixed1", "mixed2"};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    INFO("label ", reps[i].label);
    CHECK(reps[i].label == want_labels[i]);
    CHECK(std::fabs(reps[i].closed_form - reps[i].quadrature) /
              std::max(1.0, std::fabs(reps[i].closed_form)) <=
          1e-9);
    CHECK(rel(reps[i].scale_c, log_scale_c(params_1000())) <= 1e-15);
    CHECK(!reps[i].order_tag.empty());
  }
}

TEST_CASE("order tags follow the mass-ratio bookkeeping") {
  const std::vector<CorrectionReport> reps =
      corrections_report(params_1000(), beta2_paper, 1e-12);
  auto tag = [&](const std::string& label) -> std::string {
    for (const CorrectionReport& r : reps)
      if (r.label == label) return r.order_tag;
    return "";
  };
  CHECK(tag("binding_log") == "O(ln(M/m*))");
  CHECK(tag("b") == "O(ln(M/m*))");
  CHECK(tag("mixed1") == "O(ln(M/m*))");
  CHECK(tag("a1") == "O(1)");
  CHECK(tag("c") == "O((m*/M) ln^2(M/m*))");
  CHECK(tag("mixed2") == "O((m*/M) ln^2(M/m*))");
}

TEST_CASE("integration-by-parts twins agree with the moment forms") {
  const PhysicalParams& p = params_1000();
  CHECK(std::fabs(mixed_gradient_first_direct(p, beta2_paper) -
                  mixed_gradient_first(p, beta2_paper)) <= 1e-9);
  CHECK(std::fabs(mixed_gradient_second_direct(p, beta2_paper) -
                  mixed_gradient_second(p, beta2_paper)) <= 1e-11);
}

TEST_CASE("order hierarchy at M/m = 1000") {
  const PhysicalParams& p = params_1000();
  const std::vector<CorrectionReport> reps =
      corrections_report(p, beta2_paper, 1e-12);
  auto mag = [&](const std::string& label) {
    for (const CorrectionReport& r : reps)
      if (r.label == label) return std::fabs(r.closed_form);
    return 0.0;
  };
  const double E0 = std::fabs(energy_level(0, p, beta2_paper).energy_ratio);
  CHECK(mag("c") < mag("a1"));
  CHECK(mag("a1") < mag("b"));
  CHECK(mag("b") < E0);
  CHECK(mag("binding_log") < E0);
  CHECK(mag("mixed2") < mag("mixed1"));
}

TEST_CASE("a1 is independent of the mass ratio and matches its closed value") {
  const double beta = std::sqrt(beta2_paper);
  const double want = 8.0 / (std::exp(2.0 * euler_gamma) *
                             (1.0 + 2.0 * beta) * (1.0 + 2.0 * beta));
  for (double ratio : {1e2, 1e3, 1e4}) {
    const PhysicalParams p = PhysicalParams::reduced(ratio);
    CHECK(rel(expect_a1(p, beta2_paper), want) <= 1e-13);
  }
}

TEST_CASE("binding_log shifts by exactly ln(g2/g1)/(2 e^{2 gamma})") {
  // the only ratio dependence of <ln(c z)> is through ln z0, i.e. ln g
  const PhysicalParams p1 = PhysicalParams::reduced(1e2);
  const PhysicalParams p2 = PhysicalParams::reduced(1e3);
  const double got = binding_log_correction(p2, beta2_paper) -
                     binding_log_correction(p1, beta2_paper);
  const double want = std::log(p2.g() / p1.g()) /
                      (2.0 * std::exp(2.0 * euler_gamma));
  CHECK(std::fabs(got - want) <= 1e-14);
}

TEST_CASE("log variance equals the Hurwitz zeta value by quadrature") {
  const PhysicalParams& p = params_1000();
  const double c = log_scale_c(p);
  const double lq = moment_quadrature(
      p, beta2_paper, [&](double z) { return std::log(c * z); }, 1e-12);
  const double l2q = moment_quadrature(
      p, beta2_paper,
      [&](double z) {
        const double lg = std::log(c * z);
        return lg * lg;
      },
      1e-12);
  const double beta = std::sqrt(beta2_paper);
  CHECK(std::fabs(l2q - lq * lq - trigamma(2.0 * beta + 2.0)) <= 1e-10);
}

TEST_CASE("corrections stay finite and ordered across beta2 choices") {
  const PhysicalParams& p = params_1000();
  for (double b2 : {1.0 / 12.0, beta2_paper}) {
    const std::vector<CorrectionReport> reps = corrections_report(p, b2, 1e-12);
    for (const CorrectionReport& r : reps) {
      CHECK(std::isfinite(r.closed_form));
      CHECK(std::isfinite(r.quadrature));
    }
  }
}
