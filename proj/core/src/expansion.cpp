#include "oscint/expansion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oscint/specfun.hpp"

namespace oscint {

namespace {

void check_sign(int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("expansion: sign must be +1 or -1");
  }
}

void check_order_index(int k) {
  if (k < 0) {
    throw std::invalid_argument("expansion: term index must be non-negative");
  }
}

int require_integer_exponent(const PhaseModel& phase) {
  if (!phase.exponent_is_integer()) {
    throw std::invalid_argument(
        "expansion: this region requires an integer phase exponent");
  }
  return phase.integer_exponent();
}

// Terms come from derivatives of the transplanted amplitude; a few guard
// orders absorb the inversion's high-order error without touching the
// reported coefficients.
constexpr int kGuardOrders = 4;

enum class Side { positive, reflected, both };

AsymptoticExpansion assemble(const PhaseModel& phase,
                             const Amplitude& amplitude, int sign, int N,
                             Side side, Region region, Variant variant) {
  check_sign(sign);
  const double p = phase.exponent;
  const int last = N - gauss_symbol(p) - 1;  // largest retained term index
  const TruncatedSeries g =
      g_series(phase, amplitude, std::max(1, last + kGuardOrders));

  AsymptoticExpansion expansion;
  expansion.sign = sign;
  expansion.region = region;
  expansion.remainder_exponent = (static_cast<double>(N) - p + 1.0) / p;
  expansion.terms.reserve(static_cast<std::size_t>(last) + 1);
  const int m = side == Side::positive ? 0 : phase.integer_exponent();
  for (int k = 0; k <= last; ++k) {
    std::complex<double> model;
    switch (side) {
      case Side::positive:
        model = halfline_coefficient(p, k, sign);
        break;
      case Side::reflected:
        // Reflecting x -> -x turns a(x) into a(-x); the k-th Maclaurin
        // coefficient of the transplanted amplitude picks up (-1)^k.
        model = (k % 2 == 0 ? 1.0 : -1.0) *
                reflected_halfline_coefficient(m, k, sign);
        break;
      case Side::both:
        model = fullline_coefficient(m, k, sign, variant);
        break;
    }
    expansion.terms.push_back(
        {k, (static_cast<double>(k) + 1.0) / p, model * g.coefficient(k)});
  }
  return expansion;
}

}  // namespace

std::complex<double> halfline_coefficient(double p, int k, int sign) {
  check_sign(sign);
  check_order_index(k);
  if (!(p > 0.0)) {
    throw std::invalid_argument(
        "halfline_coefficient: exponent must be positive");
  }
  const double ratio = (static_cast<double>(k) + 1.0) / p;
  return (gamma(ratio) / p) *
         std::polar(1.0, sign * std::numbers::pi / 2.0 * ratio);
}

std::complex<double> reflected_halfline_coefficient(int m, int k, int sign) {
  check_sign(sign);
  check_order_index(k);
  if (m < 1) {
    throw std::invalid_argument(
        "reflected_halfline_coefficient: exponent must be a positive integer");
  }
  const double ratio = (static_cast<double>(k) + 1.0) / m;
  const double reflect = (m % 2 == 0) ? 1.0 : -1.0;  // (-x)^m = (-1)^m x^m
  return (gamma(ratio) / m) *
         std::polar(1.0, sign * reflect * std::numbers::pi / 2.0 * ratio);
}

std::complex<double> fullline_coefficient(int m, int k, int sign,
                                          Variant variant) {
  const bool even = (k % 2 == 0);
  const double parity = (even == (variant == Variant::corrected)) ? 1.0 : -1.0;
  return halfline_coefficient(static_cast<double>(m), k, sign) +
         parity * reflected_halfline_coefficient(m, k, sign);
}

TruncatedSeries g_series(const PhaseModel& phase, const Amplitude& amplitude,
                         int order) {
  if (order < 1) {
    throw std::invalid_argument("g_series: order must be at least 1");
  }
  if (!(amplitude.support_radius() <= phase.validity_radius)) {
    throw std::invalid_argument(
        "g_series: amplitude support must lie inside the phase's certified "
        "inversion radius");
  }
  const TruncatedSeries inverse = phi_inverse_series(phase, order + 1);
  const TruncatedSeries transplanted =
      compose(amplitude.taylor_at_zero(order), inverse.truncated(order));
  return multiply(transplanted, inverse.derivative());
}

AsymptoticExpansion half_line_positive(const PhaseModel& phase,
                                       const Amplitude& amplitude, int sign,
                                       int N) {
  if (static_cast<double>(N) < phase.exponent + 1.0) {
    throw std::invalid_argument(
        "half_line_positive: N must be at least p + 1");
  }
  return assemble(phase, amplitude, sign, N, Side::positive,
                  Region::half_line_positive, Variant::corrected);
}

AsymptoticExpansion half_line_negative(const PhaseModel& phase,
                                       const Amplitude& amplitude, int sign,
                                       int N) {
  const int m = require_integer_exponent(phase);
  if (N <= m) {
    throw std::invalid_argument("half_line_negative: N must exceed p");
  }
  return assemble(phase, amplitude, sign, N, Side::reflected,
                  Region::half_line_negative, Variant::corrected);
}

AsymptoticExpansion full_line(const PhaseModel& phase,
                              const Amplitude& amplitude, int sign, int N,
                              Variant variant) {
  const int m = require_integer_exponent(phase);
  if (N <= m) {
    throw std::invalid_argument("full_line: N must exceed p");
  }
  return assemble(phase, amplitude, sign, N, Side::both, Region::full_line,
                  variant);
}

std::complex<double> evaluate(const AsymptoticExpansion& expansion,
                              double lambda) {
  if (!(lambda > 0.0)) {
    throw std::domain_error("evaluate: lambda must be positive");
  }
  std::complex<double> acc = 0.0;
  for (const ExpansionTerm& term : expansion.terms) {
    acc += term.coefficient * std::pow(lambda, -term.exponent);
  }
  return acc;
}

}  // namespace oscint
