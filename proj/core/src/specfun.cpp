#include "oscint/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oscint {

namespace {

// Lanczos coefficients for g = 7, n = 9 (the classic double-precision set).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7,
};

const double kInvE = std::exp(-1.0);

}  // namespace

double gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma: argument must be positive");
  }
  if (x < 0.5) {
    // One recurrence step moves the argument into the Lanczos sweet spot.
    return gamma(x + 1.0) / x;
  }
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) *
         std::exp(-t) * sum;
}

double lambert_w0(double y) {
  if (!(y >= -kInvE)) {
    throw std::domain_error("lambert_w0: argument must be at least -1/e");
  }
  if (y == 0.0) return 0.0;

  const double margin = y + kInvE;  // distance from the branch point
  if (margin < 1e-6) {
    // Square-root expansion about the branch point; the Halley denominator
    // degenerates here. Error ~p^4 (< 1e-10 at this threshold).
    const double pterm = std::sqrt(2.0 * std::numbers::e * margin);
    return -1.0 + pterm * (1.0 + pterm * (-1.0 / 3.0 + pterm * 11.0 / 72.0));
  }

  double w;
  if (y < -0.3) {
    w = -1.0 + std::sqrt(2.0 * (1.0 + std::numbers::e * y));
  } else if (y < 1.0) {
    w = y * (1.0 + y * (-1.0 + y * 1.5));  // Maclaurin head
  } else {
    const double ly = std::log(y);
    const double lly = std::log(ly > 1.0 ? ly : 1.0);
    w = ly - lly + (ly > 1.0 ? lly / ly : 0.0);
  }

  for (int it = 0; it < 40; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - y;
    if (std::fabs(f) <= 1e-15 * std::fmax(1.0, std::fabs(y))) break;
    // Halley step: cubic convergence, so 40 iterations is a generous cap.
    const double denom =
        ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
    w -= f / denom;
  }
  return w;
}

TruncatedSeries lambert_w_series(int order) {
  if (order < 1) {
    throw std::invalid_argument("lambert_w_series: order must be at least 1");
  }
  std::vector<double> w(static_cast<std::size_t>(order) + 1, 0.0);
  for (int n = 1; n <= order; ++n) {
    // (-n)^(n-1) / n!, built as a product of small ratios to avoid
    // overflowing intermediates.
    double term = 1.0;
    for (int i = 1; i < n; ++i) {
      term *= -static_cast<double>(n) / static_cast<double>(i + 1);
    }
    w[static_cast<std::size_t>(n)] = term;
  }
  return TruncatedSeries(std::move(w));
}

double lambert_w_derivative(double y) {
  if (!(y > -kInvE)) {
    throw std::domain_error(
        "lambert_w_derivative: argument must exceed -1/e (branch point is "
        "singular)");
  }
  if (y == 0.0) return 1.0;
  const double w = lambert_w0(y);
  return w / (y * (1.0 + w));
}

}  // namespace oscint
