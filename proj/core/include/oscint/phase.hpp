#pragma once

#include <vector>

#include "oscint/series.hpp"

namespace oscint {

/// Phase phi(x) = x^p (1 + sum_{j>=1} a_j x^j) together with the radii on
/// which the normal form is certified. Build through build_phase().
struct PhaseModel {
  /// Leading exponent p > 0. Non-integer p restricts the phase to x >= 0.
  double exponent = 1.0;
  /// Perturbation coefficients a_1..a_J (may be empty).
  std::vector<double> perturbation;
  /// sup_j |a_j|^(1/j); zero for an empty or all-zero perturbation.
  double growth = 0.0;
  /// 1/(2*growth): inside this radius the bracket 1 + sum a_j x^j stays
  /// positive, so the phase vanishes only at the origin. +infinity when
  /// growth == 0.
  double positivity_radius = 0.0;
  /// Radius on which the normalizing map f(x) = x (1 + sum a_j x^j)^(1/p)
  /// is certified strictly increasing (f' >= 0.1), hence invertible.
  /// At most positivity_radius / 2.
  double validity_radius = 0.0;

  bool exponent_is_integer() const;
  /// The exponent as an integer m; requires exponent_is_integer().
  int integer_exponent() const;
};

/// Largest integer in (p-1, p]: p itself for integer p, floor(p) otherwise.
/// This is the number of expansion terms lost to the remainder.
int gauss_symbol(double p);

/// Validates p > 0, computes the growth bound and both radii.
PhaseModel build_phase(double p, std::vector<double> perturbation);

/// Pointwise phase value. Requires |x| < positivity_radius, and x >= 0
/// unless the exponent is an integer.
double phi_eval(const PhaseModel& phase, double x);

/// Maclaurin series of the normalizing map f(x) = x (1 + u(x))^(1/p),
/// truncated at `order` >= 1. By construction phi(x) = f(x)^p.
TruncatedSeries f_series(const PhaseModel& phase, int order);

/// Compositional inverse of f_series, truncated at `order` >= 1.
TruncatedSeries phi_inverse_series(const PhaseModel& phase, int order);

/// The perturbation a_j = 1/j!, j = 1..j_max, for which f(x) = x e^(x/p)
/// and the inverse map is p * W_0(y/p). Matches the "exp" config preset.
std::vector<double> exp_perturbation(int j_max);

}  // namespace oscint
