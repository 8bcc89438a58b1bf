#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <doctest.h>

#include "oscint/expansion.hpp"
#include "oscint/oracle.hpp"

namespace {

using std::complex;

TEST_SUITE("oracle") {

TEST_CASE("indicator quadrature matches the closed form for e^{i lambda x}") {
  const oscint::PhaseModel phase = oscint::build_phase(1.0, {});
  for (double lambda : {1.0, 10.0, 100.0, 1000.0}) {
    const oscint::QuadratureResult q =
        oscint::integrate_indicator(phase, {1.0}, 0.0, 1.0, lambda, +1);
    const complex<double> il(0.0, lambda);
    const complex<double> exact = (std::exp(il) - 1.0) / il;
    CHECK(std::abs(q.value - exact) <= 1e-12 * std::abs(exact));
    CHECK(q.panels >= 1);
    CHECK(q.error_estimate >= 0.0);
  }
}

TEST_CASE("zero amplitude integrates to exactly zero") {
  const oscint::PhaseModel phase = oscint::build_phase(2.0, {});
  const oscint::Amplitude amp({0.0}, 0.3, 0.6);
  const oscint::QuadratureResult q = oscint::integrate_oscillatory(
      phase, amp, 50.0, +1, oscint::Region::full_line);
  CHECK(q.value == complex<double>(0.0, 0.0));
  CHECK(q.error_estimate == 0.0);
}

TEST_CASE("opposite signs produce conjugate values") {
  const oscint::PhaseModel phase = oscint::build_phase(2.0, {0.25});
  const oscint::Amplitude amp({1.0, 0.5}, 0.2, 0.45);
  const oscint::QuadratureResult plus = oscint::integrate_oscillatory(
      phase, amp, 300.0, +1, oscint::Region::full_line);
  const oscint::QuadratureResult minus = oscint::integrate_oscillatory(
      phase, amp, 300.0, -1, oscint::Region::full_line);
  CHECK(std::abs(minus.value - std::conj(plus.value)) <=
        1e-15 * (1.0 + std::abs(plus.value)));
}

TEST_CASE("full line equals the sum of the two half lines") {
  const oscint::PhaseModel phase = oscint::build_phase(3.0, {0.1});
  const oscint::Amplitude amp({1.0, 1.0, 0.5}, 0.3, 0.6);
  const double lambda = 700.0;
  const oscint::QuadratureResult full = oscint::integrate_oscillatory(
      phase, amp, lambda, +1, oscint::Region::full_line);
  const oscint::QuadratureResult pos = oscint::integrate_oscillatory(
      phase, amp, lambda, +1, oscint::Region::half_line_positive);
  const oscint::QuadratureResult neg = oscint::integrate_oscillatory(
      phase, amp, lambda, +1, oscint::Region::half_line_negative);
  CHECK(std::abs(full.value - (pos.value + neg.value)) <=
        1e-15 * (1.0 + std::abs(full.value)));
  CHECK(full.panels == pos.panels + neg.panels);
}

TEST_CASE("oracle agrees with the expansion to the expected asymptotic gap") {
  const oscint::PhaseModel phase = oscint::build_phase(2.0, {});
  const oscint::Amplitude amp({1.0, 1.0, 1.0}, 0.3, 0.6);
  const double lambda = 400.0;
  const oscint::QuadratureResult q = oscint::integrate_oscillatory(
      phase, amp, lambda, +1, oscint::Region::half_line_positive);
  const oscint::AsymptoticExpansion e =
      oscint::half_line_positive(phase, amp, +1, 4);
  const double gap = std::abs(q.value - oscint::evaluate(e, lambda));
  // Truncation after two terms leaves an O(lambda^{-3/2}) remainder:
  // measured 5.6e-5 at lambda = 400. Both bounds would catch a broken
  // oracle (too large) or an oracle accidentally wired to the expansion
  // itself (too small).
  CHECK(gap <= 2e-4);
  CHECK(gap >= 1e-6);
}

TEST_CASE("quadrature error estimate is far below the asymptotic residual") {
  const oscint::PhaseModel fresnel = oscint::build_phase(2.0, {});
  const oscint::Amplitude bump({1.0, 1.0, 1.0}, 0.3, 0.6);
  const oscint::QuadratureResult q1 = oscint::integrate_oscillatory(
      fresnel, bump, 1600.0, +1, oscint::Region::half_line_positive);
  CHECK(q1.error_estimate <= 1e-9 * std::abs(q1.value));

  const oscint::PhaseModel expish =
      oscint::build_phase(1.0, oscint::exp_perturbation(12));
  const oscint::Amplitude narrow({1.0, 1.0}, 0.1, 0.24);
  const oscint::QuadratureResult q2 = oscint::integrate_oscillatory(
      expish, narrow, 800.0, +1, oscint::Region::half_line_positive);
  CHECK(q2.error_estimate <= 1e-9 * std::abs(q2.value));
}

TEST_CASE("adaptive splitting engages for high-degree germs") {
  // x^40 on [0, 1] at lambda = 1: a single half-period panel, but beyond
  // the exactness degree of GL16, so the refinement criterion must split.
  const oscint::PhaseModel phase = oscint::build_phase(1.0, {});
  std::vector<double> germ(41, 0.0);
  germ.back() = 1.0;
  const oscint::QuadratureResult whole =
      oscint::integrate_indicator(phase, germ, 0.0, 1.0, 1.0, +1);
  CHECK(whole.panels >= 2);

  const oscint::QuadratureResult left =
      oscint::integrate_indicator(phase, germ, 0.0, 0.5, 1.0, +1);
  const oscint::QuadratureResult right =
      oscint::integrate_indicator(phase, germ, 0.5, 1.0, 1.0, +1);
  CHECK(std::abs(whole.value - (left.value + right.value)) <= 1e-12);
}

TEST_CASE("indicator splits the interval at the origin") {
  const oscint::PhaseModel phase = oscint::build_phase(2.0, {});
  const oscint::QuadratureResult both =
      oscint::integrate_indicator(phase, {1.0}, -0.5, 0.5, 40.0, +1);
  const oscint::QuadratureResult half =
      oscint::integrate_indicator(phase, {1.0}, 0.0, 0.5, 40.0, +1);
  // Even phase, even germ: the two sides contribute equally.
  CHECK(std::abs(both.value - 2.0 * half.value) <=
        1e-13 * (1.0 + std::abs(both.value)));
}

TEST_CASE("precondition violations throw") {
  const oscint::PhaseModel steep = oscint::build_phase(2.0, {3.0});
  const oscint::Amplitude wide({1.0}, 0.05, 0.5);
  CHECK_THROWS_AS(oscint::integrate_oscillatory(
                      steep, wide, 10.0, +1, oscint::Region::full_line),
                  std::invalid_argument);

  const oscint::PhaseModel fractional = oscint::build_phase(2.5, {});
  const oscint::Amplitude amp({1.0}, 0.3, 0.6);
  CHECK_THROWS_AS(oscint::integrate_oscillatory(
                      fractional, amp, 10.0, +1, oscint::Region::full_line),
                  std::invalid_argument);
  CHECK_NOTHROW(oscint::integrate_oscillatory(
      fractional, amp, 10.0, +1, oscint::Region::half_line_positive));

  CHECK_THROWS_AS(oscint::integrate_oscillatory(
                      fractional, amp, 0.0, +1,
                      oscint::Region::half_line_positive),
                  std::domain_error);
  CHECK_THROWS_AS(oscint::integrate_oscillatory(
                      fractional, amp, 10.0, 0,
                      oscint::Region::half_line_positive),
                  std::invalid_argument);

  CHECK_THROWS_AS(
      oscint::integrate_indicator(fractional, {}, 0.0, 0.5, 10.0, +1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      oscint::integrate_indicator(fractional, {1.0}, 0.5, 0.5, 10.0, +1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      oscint::integrate_indicator(fractional, {1.0}, -0.1, 0.5, 10.0, +1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      oscint::integrate_indicator(steep, {1.0}, 0.0, 0.2, 10.0, +1),
      std::invalid_argument);
}

TEST_CASE("decay_slope recovers an exact power law") {
  std::vector<std::pair<double, double>> points;
  for (double lambda : {10.0, 20.0, 40.0, 80.0}) {
    points.emplace_back(lambda, 7.0 * std::pow(lambda, -1.5));
  }
  CHECK(oscint::decay_slope(points) == doctest::Approx(-1.5).epsilon(1e-12));

  std::vector<std::pair<double, double>> flat = {
      {10.0, 0.25}, {100.0, 0.25}, {1000.0, 0.25}};
  CHECK(std::fabs(oscint::decay_slope(flat)) <= 1e-14);
}

TEST_CASE("decay_slope input validation") {
  CHECK_THROWS_AS(oscint::decay_slope({{1.0, 1.0}, {2.0, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(oscint::decay_slope({{1.0, 1.0}, {2.0, 0.5}, {4.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(oscint::decay_slope({{1.0, 1.0}, {2.0, 0.5}, {-4.0, 0.2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(oscint::decay_slope({{5.0, 1.0}, {5.0, 0.5}, {5.0, 0.2}}),
                  std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
