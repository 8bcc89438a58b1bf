#pragma once

#include "oscint/series.hpp"

namespace oscint {

/// Gamma function on the positive reals (Lanczos approximation, g = 7,
/// nine terms; arguments below 1/2 go through the recurrence
/// Gamma(x) = Gamma(x+1)/x). Relative accuracy ~1e-14 on (0, 50].
double gamma(double x);

/// Principal branch W_0 of the Lambert W function, defined for
/// y >= -1/e. Halley iteration; near the branch point the square-root
/// expansion is used directly, where accuracy degrades to ~1e-8.
double lambert_w0(double y);

/// Maclaurin series of W_0: w_n = (-n)^(n-1) / n!. Requires order >= 1.
TruncatedSeries lambert_w_series(int order);

/// d/dy W_0(y) = W / (y (1 + W)), with the removable limit 1 at y = 0.
/// Singular at the branch point: requires y > -1/e.
double lambert_w_derivative(double y);

}  // namespace oscint
