#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oscint/amplitude.hpp"
#include "oscint/expansion.hpp"
#include "oscint/phase.hpp"

namespace oscint {

/// Quadrature could not certify the requested accuracy.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  std::complex<double> value;
  /// Sum over panels of |GL16 - GL24|; an a-posteriori error proxy.
  double error_estimate = 0.0;
  /// Number of Gauss panels actually evaluated.
  int panels = 0;
};

/// Reference value of integral over `region` of e^{i sign lambda phi(x)}
/// a(x) dx by panel-wise Gauss-Legendre quadrature, with one panel per
/// half-period of the phase and adaptive splitting driven by the GL16/GL24
/// disagreement. Requires the amplitude support inside the phase's
/// certified inversion radius (which guarantees |phi| is monotone on each
/// side of the origin, the property the panel decomposition relies on).
/// Throws OracleError when the two orders still disagree beyond 1e-6
/// relative after maximal subdivision.
QuadratureResult integrate_oscillatory(const PhaseModel& phase,
                                       const Amplitude& amplitude,
                                       double lambda, int sign, Region region);

/// Same oscillatory quadrature with a bare polynomial germ on [lo, hi]
/// instead of a cutoff amplitude. This is the test hook for closed-form
/// anchors such as integral over [0, 1] of e^{i lambda x} dx.
QuadratureResult integrate_indicator(const PhaseModel& phase,
                                     const std::vector<double>& germ,
                                     double lo, double hi, double lambda,
                                     int sign);

/// Least-squares slope of log(residual) against log(lambda); the observed
/// algebraic decay rate. Requires at least three points with positive
/// coordinates.
double decay_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace oscint
