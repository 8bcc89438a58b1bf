#include "oscint/phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oscint {

namespace {

// Minimum of f' over [-radius, radius] (or [0, radius] for non-integer
// exponents), sampled on a fixed grid. f' is a short polynomial, so a
// moderately dense grid is reliable; determinism matters more than the
// last decimal of the minimum here.
double min_slope(const TruncatedSeries& df, double radius, bool two_sided) {
  constexpr int kSamples = 128;
  double lo = two_sided ? -radius : 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kSamples; ++i) {
    const double x =
        lo + (radius - lo) * static_cast<double>(i) / kSamples;
    best = std::min(best, df.eval(x));
  }
  return best;
}

}  // namespace

bool PhaseModel::exponent_is_integer() const {
  return exponent == std::floor(exponent);
}

int PhaseModel::integer_exponent() const {
  if (!exponent_is_integer()) {
    throw std::domain_error("PhaseModel: exponent is not an integer");
  }
  return static_cast<int>(exponent);
}

int gauss_symbol(double p) {
  if (!(p > 0.0)) {
    throw std::invalid_argument("gauss_symbol: argument must be positive");
  }
  // floor(p) satisfies p-1 < result <= p in both the integer and the
  // fractional case.
  return static_cast<int>(std::floor(p));
}

PhaseModel build_phase(double p, std::vector<double> perturbation) {
  if (!(p > 0.0)) {
    throw std::invalid_argument("build_phase: exponent must be positive");
  }
  PhaseModel phase;
  phase.exponent = p;
  phase.perturbation = std::move(perturbation);

  double growth = 0.0;
  for (std::size_t j = 0; j < phase.perturbation.size(); ++j) {
    const double a = phase.perturbation[j];
    if (a != 0.0) {
      growth = std::max(growth,
                        std::pow(std::fabs(a), 1.0 / static_cast<double>(j + 1)));
    }
  }
  phase.growth = growth;
  if (growth == 0.0) {
    phase.positivity_radius = std::numeric_limits<double>::infinity();
    phase.validity_radius = std::numeric_limits<double>::infinity();
    return phase;
  }
  phase.positivity_radius = 1.0 / (2.0 * growth);

  // Certify f' >= 0.1 on the candidate radius; shrink by bisection when the
  // derivative dips (possible for small p, where the 1/p exponent makes the
  // perturbation bite harder). f'(0) = 1, so some positive radius always
  // qualifies.
  const double candidate = phase.positivity_radius / 2.0;
  const int f_order =
      static_cast<int>(phase.perturbation.size()) + 16;
  const TruncatedSeries df = f_series(phase, f_order).derivative();
  const bool two_sided = phase.exponent_is_integer();
  if (min_slope(df, candidate, two_sided) >= 0.1) {
    phase.validity_radius = candidate;
  } else {
    double good = 0.0, bad = candidate;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (good + bad);
      (min_slope(df, mid, two_sided) >= 0.1 ? good : bad) = mid;
    }
    phase.validity_radius = good;
  }
  return phase;
}

double phi_eval(const PhaseModel& phase, double x) {
  if (!(std::fabs(x) < phase.positivity_radius)) {
    throw std::domain_error(
        "phi_eval: |x| must be below the positivity radius");
  }
  if (x < 0.0 && !phase.exponent_is_integer()) {
    throw std::domain_error(
        "phi_eval: negative argument requires an integer exponent");
  }
  double bracket = 1.0;
  double xj = x;
  for (double a : phase.perturbation) {
    bracket += a * xj;
    xj *= x;
  }
  return std::pow(x, phase.exponent) * bracket;
}

TruncatedSeries f_series(const PhaseModel& phase, int order) {
  if (order < 1) {
    throw std::invalid_argument("f_series: order must be at least 1");
  }
  // f = x * (1 + u)^(1/p) with u the perturbation series; the bracket is
  // needed one order lower because of the leading x.
  std::vector<double> u(static_cast<std::size_t>(order), 0.0);
  const std::size_t terms =
      std::min(phase.perturbation.size(), u.size() - 1);
  for (std::size_t j = 0; j < terms; ++j) {
    u[j + 1] = phase.perturbation[j];
  }
  const TruncatedSeries bracket =
      binomial_power(TruncatedSeries(std::move(u)), 1.0 / phase.exponent);
  std::vector<double> f(static_cast<std::size_t>(order) + 1, 0.0);
  for (int n = 1; n <= order; ++n) {
    f[static_cast<std::size_t>(n)] = bracket.coefficient(n - 1);
  }
  return TruncatedSeries(std::move(f));
}

TruncatedSeries phi_inverse_series(const PhaseModel& phase, int order) {
  return revert(f_series(phase, order));
}

std::vector<double> exp_perturbation(int j_max) {
  if (j_max < 1) {
    throw std::invalid_argument("exp_perturbation: j_max must be at least 1");
  }
  std::vector<double> a(static_cast<std::size_t>(j_max));
  double factorial = 1.0;
  for (int j = 1; j <= j_max; ++j) {
    factorial *= static_cast<double>(j);
    a[static_cast<std::size_t>(j - 1)] = 1.0 / factorial;
  }
  return a;
}

}  // namespace oscint
