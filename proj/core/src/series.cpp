#include "oscint/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace oscint {

namespace {

// Shared kernel for multiply/compose/binomial_power: Cauchy product of two
// coefficient vectors truncated at `order`. Partial sums are accumulated in
// long double so that coefficient-sized cancellations cost one rounding, not
// one per term; this keeps products commutative and associative to within a
// relative epsilon even for large coefficients.
std::vector<double> product(const std::vector<double>& a,
                            const std::vector<double>& b, int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  const int na = static_cast<int>(a.size()) - 1;
  const int nb = static_cast<int>(b.size()) - 1;
  for (int n = 0; n <= order; ++n) {
    const int lo = std::max(0, n - nb);
    const int hi = std::min(n, na);
    long double acc = 0.0L;
    for (int i = lo; i <= hi; ++i) {
      acc += static_cast<long double>(a[static_cast<std::size_t>(i)]) *
             b[static_cast<std::size_t>(n - i)];
    }
    c[static_cast<std::size_t>(n)] = static_cast<double>(acc);
  }
  return c;
}

// Horner evaluation of sum_k outer[k] * inner^k truncated at `order`;
// `inner` must have zero constant term (checked by callers).
std::vector<double> horner_compose(const std::vector<double>& outer,
                                   const std::vector<double>& inner,
                                   int order) {
  std::vector<double> acc(static_cast<std::size_t>(order) + 1, 0.0);
  acc[0] = outer.back();
  for (int k = static_cast<int>(outer.size()) - 2; k >= 0; --k) {
    acc = product(acc, inner, order);
    acc[0] += outer[static_cast<std::size_t>(k)];
  }
  return acc;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("TruncatedSeries: coefficient list is empty");
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  return TruncatedSeries(
      std::vector<double>(static_cast<std::size_t>(order) + 1, 0.0));
}

TruncatedSeries TruncatedSeries::constant(double value, int order) {
  TruncatedSeries s = zero(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  if (order < 1) {
    throw std::invalid_argument(
        "TruncatedSeries::identity: order must be at least 1");
  }
  TruncatedSeries s = zero(order);
  s.coeffs_[1] = 1.0;
  return s;
}

double TruncatedSeries::coefficient(int n) const {
  if (n < 0) {
    throw std::invalid_argument("TruncatedSeries: negative coefficient index");
  }
  if (n > order()) return 0.0;
  return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  const std::size_t n = std::min(c.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, c.begin());
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return zero(0);
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = static_cast<double>(i + 1) * coeffs_[i + 1];
  }
  return TruncatedSeries(std::move(d));
}

double TruncatedSeries::eval(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

TruncatedSeries linear_combine(const TruncatedSeries& a, double alpha,
                               const TruncatedSeries& b, double beta) {
  const int order = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] =
        alpha * a.coefficient(n) + beta * b.coefficient(n);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  return TruncatedSeries(product(a.coeffs(), b.coeffs(), order));
}

TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner) {
  if (inner.coefficient(0) != 0.0) {
    throw std::invalid_argument(
        "compose: inner series must have zero constant term");
  }
  return TruncatedSeries(
      horner_compose(outer.coeffs(), inner.coeffs(), outer.order()));
}

TruncatedSeries binomial_power(const TruncatedSeries& u, double alpha) {
  if (u.coefficient(0) != 0.0) {
    throw std::invalid_argument(
        "binomial_power: series must have zero constant term");
  }
  const int order = u.order();
  // Binomial coefficients C(alpha, n) by the ratio recurrence; exact for
  // integer alpha (the recurrence hits zero and stays there).
  std::vector<double> binom(static_cast<std::size_t>(order) + 1);
  binom[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    binom[static_cast<std::size_t>(n)] = binom[static_cast<std::size_t>(n - 1)] *
                                         (alpha - static_cast<double>(n - 1)) /
                                         static_cast<double>(n);
  }
  return TruncatedSeries(horner_compose(binom, u.coeffs(), order));
}

TruncatedSeries reciprocal(const TruncatedSeries& v) {
  if (v.coefficient(0) == 0.0) {
    throw std::invalid_argument(
        "reciprocal: series must have nonzero constant term");
  }
  const int order = v.order();
  std::vector<double> w(static_cast<std::size_t>(order) + 1, 0.0);
  w[0] = 1.0 / v.coefficient(0);
  for (int n = 1; n <= order; ++n) {
    long double acc = 0.0L;
    for (int j = 1; j <= n; ++j) {
      acc += static_cast<long double>(v.coefficient(j)) *
             w[static_cast<std::size_t>(n - j)];
    }
    w[static_cast<std::size_t>(n)] =
        static_cast<double>(-acc / v.coefficient(0));
  }
  return TruncatedSeries(std::move(w));
}

TruncatedSeries revert(const TruncatedSeries& f) {
  if (f.coefficient(0) != 0.0) {
    throw std::invalid_argument("revert: series must vanish at the origin");
  }
  if (f.order() < 1 || f.coefficient(1) == 0.0) {
    throw std::invalid_argument(
        "revert: linear coefficient must be nonzero");
  }
  const int order = f.order();
  const TruncatedSeries id = TruncatedSeries::identity(order);
  const TruncatedSeries df = f.derivative().truncated(order);

  // Newton: g <- g - (f(g) - x) / f'(g). Correct coefficients double each
  // step, so ceil(log2(order+1)) steps suffice; two extra absorb rounding.
  TruncatedSeries g = TruncatedSeries::zero(order);
  {
    std::vector<double> c = g.coeffs();
    c[1] = 1.0 / f.coefficient(1);
    g = TruncatedSeries(std::move(c));
  }
  int steps = 2;
  for (int m = order + 1; m > 1; m = (m + 1) / 2) ++steps;
  for (int it = 0; it < steps; ++it) {
    const TruncatedSeries residual = linear_combine(compose(f, g), 1.0, id, -1.0);
    const TruncatedSeries slope = compose(df, g);
    g = linear_combine(g, 1.0, multiply(residual, reciprocal(slope)), -1.0);
  }

  // Round-trip sanity check, scaled by the size of the result: for badly
  // conditioned inputs the inverse coefficients grow geometrically and an
  // absolute test would be meaningless.
  double scale = 1.0;
  for (double c : g.coeffs()) scale = std::max(scale, std::fabs(c));
  const TruncatedSeries round_trip = compose(f, g);
  for (int n = 0; n <= order; ++n) {
    const double want = (n == 1) ? 1.0 : 0.0;
    if (std::fabs(round_trip.coefficient(n) - want) > 1e-8 * scale) {
      throw std::runtime_error(
          "revert: Newton iteration failed to converge at order " +
          std::to_string(n));
    }
  }
  return g;
}

double derivative_at_zero(const TruncatedSeries& a, int k) {
  if (k < 0 || k > a.order()) {
    throw std::invalid_argument(
        "derivative_at_zero: index exceeds truncation order");
  }
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= static_cast<double>(i);
  return factorial * a.coefficient(k);
}

}  // namespace oscint
