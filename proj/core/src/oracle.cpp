#include "oscint/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace oscint {

namespace {

struct GaussRule {
  std::vector<double> nodes;  // ascending, on [-1, 1]
  std::vector<double> weights;
};

// Nodes and weights by Newton iteration on the Legendre three-term
// recurrence: machine-precision accurate and immune to table typos.
GaussRule gauss_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 =
            ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

const GaussRule& rule16() {
  static const GaussRule rule = gauss_rule(16);
  return rule;
}

const GaussRule& rule24() {
  static const GaussRule rule = gauss_rule(24);
  return rule;
}

constexpr int kMaxDepth = 12;

template <typename F>
std::complex<double> gl_panel(const F& f, const GaussRule& rule, double lo,
                              double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * acc;
}

struct PanelAccounting {
  std::complex<double> value;
  double disagreement = 0.0;
  int panels = 0;
};

// A panel is accepted when the two Gauss orders agree to a scale-relative
// tolerance; otherwise it is bisected. For smooth half-period panels the
// disagreement sits at rounding level and no splitting happens; splitting
// only kicks in for high-degree germs or unusually wide panels.
template <typename F>
void refine_panel(const F& f, double lo, double hi, int depth,
                  PanelAccounting& acct) {
  const std::complex<double> v16 = gl_panel(f, rule16(), lo, hi);
  const std::complex<double> v24 = gl_panel(f, rule24(), lo, hi);
  const double disagreement = std::abs(v16 - v24);
  if (disagreement <= 1e-14 * (1.0 + std::abs(v24)) || depth >= kMaxDepth) {
    acct.value += v24;
    acct.disagreement += disagreement;
    acct.panels += 1;
    return;
  }
  const double mid = 0.5 * (lo + hi);
  refine_panel(f, lo, mid, depth + 1, acct);
  refine_panel(f, mid, hi, depth + 1, acct);
}

// Integrates f over [lo, hi], assuming lambda*|phi| is monotone there (true
// on each side of the origin within the certified radius). Panels are cut
// at every multiple of pi reached by lambda*|phi| so that each panel spans
// at most one half-period of the oscillation.
template <typename Phi, typename F>
void integrate_segment(const Phi& phi, const F& f, double lo, double hi,
                       double lambda, PanelAccounting& acct) {
  if (!(hi > lo)) return;
  const double vlo = lambda * std::fabs(phi(lo));
  const double vhi = lambda * std::fabs(phi(hi));
  const bool increasing = vhi >= vlo;
  const double vmin = std::min(vlo, vhi);
  const double vmax = std::max(vlo, vhi);
  const long first = static_cast<long>(std::floor(vmin / std::numbers::pi)) + 1;
  const long last = static_cast<long>(std::ceil(vmax / std::numbers::pi)) - 1;

  std::vector<double> cuts;
  cuts.push_back(lo);
  if (last >= first) {
    if (last - first + 1 > 4000000L) {
      throw OracleError(
          "integrate_oscillatory: phase sweeps too many half-periods; "
          "lambda is out of the supported range");
    }
    cuts.reserve(static_cast<std::size_t>(last - first + 3));
    for (long k = first; k <= last; ++k) {
      const double target = static_cast<double>(k) * std::numbers::pi;
      double a = lo;
      double b = hi;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (a + b);
        const bool below = lambda * std::fabs(phi(mid)) < target;
        (below == increasing ? a : b) = mid;
      }
      cuts.push_back(0.5 * (a + b));
    }
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) refine_panel(f, cuts[i], cuts[i + 1], 0, acct);
  }
}

// Pointwise phase evaluation without the domain checks of phi_eval; the
// callers have already confined the segments to the admissible range.
struct PointwisePhase {
  double exponent;
  const std::vector<double>* perturbation;
  double operator()(double x) const {
    double bracket = 1.0;
    double xj = x;
    for (double a : *perturbation) {
      bracket += a * xj;
      xj *= x;
    }
    return std::pow(x, exponent) * bracket;
  }
};

void check_lambda_and_sign(double lambda, int sign) {
  if (!(lambda > 0.0)) {
    throw std::domain_error("oracle: lambda must be positive");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("oracle: sign must be +1 or -1");
  }
}

QuadratureResult finish(PanelAccounting& acct) {
  if (acct.disagreement >
      std::max(1e-6 * std::abs(acct.value), 1e-13)) {
    throw OracleError(
        "oracle: Gauss orders 16 and 24 disagree by " +
        std::to_string(acct.disagreement) +
        " after maximal subdivision; result not certified");
  }
  return {acct.value, acct.disagreement, acct.panels};
}

}  // namespace

QuadratureResult integrate_oscillatory(const PhaseModel& phase,
                                       const Amplitude& amplitude,
                                       double lambda, int sign,
                                       Region region) {
  check_lambda_and_sign(lambda, sign);
  if (region != Region::half_line_positive && !phase.exponent_is_integer()) {
    throw std::invalid_argument(
        "integrate_oscillatory: the negative axis requires an integer "
        "exponent");
  }
  if (!(amplitude.support_radius() <= phase.validity_radius)) {
    throw std::invalid_argument(
        "integrate_oscillatory: amplitude support must lie inside the "
        "phase's certified inversion radius");
  }
  const PointwisePhase phi{phase.exponent, &phase.perturbation};
  const auto integrand = [&](double x) {
    return amplitude.eval(x) * std::polar(1.0, sign * lambda * phi(x));
  };
  const double r2 = amplitude.support_radius();
  PanelAccounting acct;
  if (region != Region::half_line_positive) {
    integrate_segment(phi, integrand, -r2, 0.0, lambda, acct);
  }
  if (region != Region::half_line_negative) {
    integrate_segment(phi, integrand, 0.0, r2, lambda, acct);
  }
  return finish(acct);
}

QuadratureResult integrate_indicator(const PhaseModel& phase,
                                     const std::vector<double>& germ,
                                     double lo, double hi, double lambda,
                                     int sign) {
  check_lambda_and_sign(lambda, sign);
  if (germ.empty()) {
    throw std::invalid_argument("integrate_indicator: germ must be non-empty");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument(
        "integrate_indicator: interval must be non-degenerate");
  }
  if (!(std::fabs(lo) < phase.positivity_radius &&
        std::fabs(hi) < phase.positivity_radius)) {
    throw std::invalid_argument(
        "integrate_indicator: interval must lie inside the positivity "
        "radius");
  }
  if (lo < 0.0 && !phase.exponent_is_integer()) {
    throw std::invalid_argument(
        "integrate_indicator: the negative axis requires an integer "
        "exponent");
  }
  const PointwisePhase phi{phase.exponent, &phase.perturbation};
  const auto integrand = [&](double x) {
    double germ_value = 0.0;
    for (std::size_t i = germ.size(); i-- > 0;) {
      germ_value = germ_value * x + germ[i];
    }
    return germ_value * std::polar(1.0, sign * lambda * phi(x));
  };
  PanelAccounting acct;
  if (lo < 0.0 && hi > 0.0) {
    integrate_segment(phi, integrand, lo, 0.0, lambda, acct);
    integrate_segment(phi, integrand, 0.0, hi, lambda, acct);
  } else {
    integrate_segment(phi, integrand, lo, hi, lambda, acct);
  }
  return finish(acct);
}

double decay_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) {
    throw std::invalid_argument("decay_slope: need at least three points");
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [lambda, residual] : points) {
    if (!(lambda > 0.0) || !(residual > 0.0)) {
      throw std::invalid_argument(
          "decay_slope: points must have positive coordinates");
    }
    mean_x += std::log(lambda);
    mean_y += std::log(residual);
  }
  mean_x /= static_cast<double>(points.size());
  mean_y /= static_cast<double>(points.size());
  double num = 0.0;
  double den = 0.0;
  for (const auto& [lambda, residual] : points) {
    const double dx = std::log(lambda) - mean_x;
    num += dx * (std::log(residual) - mean_y);
    den += dx * dx;
  }
  if (den == 0.0) {
    throw std::invalid_argument(
        "decay_slope: lambda values must not all coincide");
  }
  return num / den;
}

}  // namespace oscint
