#include "oscint/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscint {

namespace {

// exp(-1/t) extended by 0 for t <= 0: smooth, flat to all orders at 0.
double bump_side(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// Smooth partition-of-unity step: 1 at q = 1, 0 at q = 0, all derivatives
// vanish at both ends. The denominator is bounded away from 0 on (0, 1).
double smooth_step(double q) {
  const double rise = bump_side(q);
  return rise / (rise + bump_side(1.0 - q));
}

}  // namespace

Amplitude::Amplitude(std::vector<double> germ, double plateau_radius,
                     double support_radius)
    : germ_(std::move(germ)),
      plateau_radius_(plateau_radius),
      support_radius_(support_radius) {
  if (germ_.empty()) {
    throw std::invalid_argument("Amplitude: germ must be non-empty");
  }
  if (!(plateau_radius_ > 0.0)) {
    throw std::invalid_argument("Amplitude: plateau radius must be positive");
  }
  if (!(support_radius_ > plateau_radius_)) {
    throw std::invalid_argument(
        "Amplitude: support radius must exceed the plateau radius");
  }
}

double Amplitude::eval(double x) const {
  const double ax = std::fabs(x);
  if (ax >= support_radius_) return 0.0;
  double germ_value = 0.0;
  for (std::size_t i = germ_.size(); i-- > 0;) {
    germ_value = germ_value * x + germ_[i];
  }
  if (ax <= plateau_radius_) return germ_value;
  const double q =
      (support_radius_ - ax) / (support_radius_ - plateau_radius_);
  return germ_value * smooth_step(q);
}

TruncatedSeries Amplitude::taylor_at_zero(int order) const {
  if (order < 0) {
    throw std::invalid_argument("Amplitude::taylor_at_zero: negative order");
  }
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  std::copy_n(germ_.begin(), std::min(germ_.size(), c.size()), c.begin());
  return TruncatedSeries(std::move(c));
}

}  // namespace oscint
