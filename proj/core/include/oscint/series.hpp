#pragma once

#include <vector>

namespace oscint {

/// Truncated real Maclaurin series c_0 + c_1 x + ... + c_M x^M.
///
/// The truncation order M is explicit: a series always stores exactly
/// M+1 coefficients. Values are immutable after construction and all
/// operations are pure, so concurrent reads need no coordination.
class TruncatedSeries {
 public:
  /// Zero series of order 0.
  TruncatedSeries() : coeffs_{0.0} {}

  /// Takes ownership of the coefficient list; order = coeffs.size() - 1.
  /// Rejects an empty list.
  explicit TruncatedSeries(std::vector<double> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(double value, int order);
  /// The series x (requires order >= 1).
  static TruncatedSeries identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// c_n, or 0 for n beyond the truncation order. Rejects n < 0.
  double coefficient(int n) const;

  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Truncates or zero-pads to the requested order.
  TruncatedSeries truncated(int order) const;

  /// Formal derivative; order drops by one (a constant stays order 0).
  TruncatedSeries derivative() const;

  /// Horner evaluation of the truncated polynomial.
  double eval(double x) const;

 private:
  std::vector<double> coeffs_;
};

/// alpha*A + beta*B, truncated to the smaller operand order.
TruncatedSeries linear_combine(const TruncatedSeries& a, double alpha,
                               const TruncatedSeries& b, double beta);

/// Cauchy product truncated to the smaller operand order.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// A(B(x)) through the order of the outer operand. The inner series must
/// have zero constant term; otherwise every coefficient of A would
/// contribute to every output coefficient.
TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner);

/// (1 + U)^alpha via generalized binomial coefficients; U must have zero
/// constant term. alpha may be any real.
TruncatedSeries binomial_power(const TruncatedSeries& u, double alpha);

/// 1 / V for a series with nonzero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& v);

/// Compositional inverse G with F(G(x)) = x through the truncation order.
/// Requires f_0 = 0 and f_1 != 0. Newton iteration on series, with a
/// round-trip residual check after the final step.
TruncatedSeries revert(const TruncatedSeries& f);

/// k-th derivative at the origin, i.e. k! * c_k. Requires 0 <= k <= order.
double derivative_at_zero(const TruncatedSeries& a, int k);

}  // namespace oscint
