#pragma once

#include <vector>

#include "oscint/series.hpp"

namespace oscint {

/// Smooth, compactly supported amplitude: a polynomial germ multiplied by
/// a C^infinity plateau cutoff that is identically 1 on [-r1, r1] and
/// identically 0 outside (-r2, r2). Because the cutoff is flat to all
/// orders at the origin, the Maclaurin data of the amplitude is exactly
/// the germ.
class Amplitude {
 public:
  /// germ: polynomial coefficients g_0..g_D (non-empty);
  /// 0 < plateau_radius < support_radius.
  Amplitude(std::vector<double> germ, double plateau_radius,
            double support_radius);

  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  /// Exact Maclaurin coefficients through `order` >= 0 (the germ,
  /// zero-padded or truncated).
  TruncatedSeries taylor_at_zero(int order) const;

  const std::vector<double>& germ() const { return germ_; }
  double plateau_radius() const { return plateau_radius_; }
  double support_radius() const { return support_radius_; }

 private:
  std::vector<double> germ_;
  double plateau_radius_;
  double support_radius_;
};

}  // namespace oscint
