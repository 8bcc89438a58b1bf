#pragma once

#include <complex>
#include <vector>

#include "oscint/amplitude.hpp"
#include "oscint/phase.hpp"
#include "oscint/series.hpp"

namespace oscint {

/// Integration region for I(lambda) = integral of e^{i s lambda phi} a.
enum class Region { half_line_positive, half_line_negative, full_line };

/// Sign convention for the reflected (negative half-line) contribution to
/// full-line coefficients. `corrected` pairs the reflection with (-1)^k and
/// is the default: it is the convention the quadrature oracle confirms
/// (e.g. it reproduces the Fresnel value sqrt(pi) e^{i pi/4} for p = 2).
/// `paper` keeps the alternative (-1)^(k+1) pairing for comparison; its
/// leading full-line coefficient vanishes for even phases, which leaves a
/// lambda^{-1/m}-sized residual against quadrature.
enum class Variant { corrected, paper };

/// One term c_k * lambda^{-exponent} of an asymptotic expansion.
struct ExpansionTerm {
  int k = 0;                     // term index
  double exponent = 0.0;         // (k+1)/p
  std::complex<double> coefficient;
};

/// Truncated expansion sum_k c_k lambda^{-(k+1)/p} with a remainder of
/// order lambda^{-remainder_exponent}.
struct AsymptoticExpansion {
  std::vector<ExpansionTerm> terms;
  double remainder_exponent = 0.0;
  int sign = +1;                 // sign of the phase exponent e^{i sign ...}
  Region region = Region::half_line_positive;
};

/// Coefficient of the model integral over [0, infinity) with monomial phase
/// x^p: (1/p) e^{i sign (pi/2)(k+1)/p} Gamma((k+1)/p). Any real p > 0.
std::complex<double> halfline_coefficient(double p, int k, int sign);

/// Coefficient of the model integral over (-infinity, 0] after reflecting
/// to the positive axis; the phase picks up (-1)^m, so
/// (1/m) e^{i sign (-1)^m (pi/2)(k+1)/m} Gamma((k+1)/m). Integer m >= 1.
std::complex<double> reflected_halfline_coefficient(int m, int k, int sign);

/// Full-line coefficient: halfline + parity * reflected_halfline, where
/// parity is (-1)^k for Variant::corrected and (-1)^(k+1) for
/// Variant::paper.
std::complex<double> fullline_coefficient(int m, int k, int sign,
                                          Variant variant);

/// Transplanted amplitude g(y) = a(phi_inverse(y)) * phi_inverse'(y), whose
/// Maclaurin coefficients multiply the model-integral coefficients above.
/// Requires the amplitude support to sit inside the certified inversion
/// radius of the phase.
TruncatedSeries g_series(const PhaseModel& phase, const Amplitude& amplitude,
                         int order);

/// Expansion of the integral over [0, infinity). Requires N >= p + 1;
/// produces terms k = 0..N-[p]-1 and remainder exponent (N - p + 1)/p.
AsymptoticExpansion half_line_positive(const PhaseModel& phase,
                                       const Amplitude& amplitude, int sign,
                                       int N);

/// Expansion of the integral over (-infinity, 0]. Integer exponent only;
/// requires N > m.
AsymptoticExpansion half_line_negative(const PhaseModel& phase,
                                       const Amplitude& amplitude, int sign,
                                       int N);

/// Expansion of the integral over the whole line. Integer exponent only;
/// requires N > m.
AsymptoticExpansion full_line(const PhaseModel& phase,
                              const Amplitude& amplitude, int sign, int N,
                              Variant variant = Variant::corrected);

/// Numeric value of the truncated expansion at lambda > 0.
std::complex<double> evaluate(const AsymptoticExpansion& expansion,
                              double lambda);

}  // namespace oscint
