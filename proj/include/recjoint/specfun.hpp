#pragma once

namespace recjoint {

/// Digamma function psi(x) for x > 0.  Absolute error below 1e-13 on (0, 1e6].
double digamma(double x);

/// Kolmogorov limit distribution K(x) = P(sup|B(t)| <= x), x >= 0.
/// Values below 4e-16 (x <= 0.18) are flushed to 0; result clamped to [0, 1].
double kolmogorov_limit_cdf(double x);

/// Standard normal cdf.
double std_normal_cdf(double x);

/// Standard normal quantile, q in (0, 1).
double std_normal_quantile(double q);

} // namespace recjoint
