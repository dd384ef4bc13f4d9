#pragma once

#include <functional>

namespace recjoint {

struct KlResult {
    double forward;  // D(pair-density || single-density)
    double reverse;  // D(single-density || pair-density)
    double distance; // symmetrized sum; equals j/k in closed form
};

/// Closed-form D(g_{j,k} || g_j) between the conditioned-pair early-value
/// density and the single-record density, canonical scale.
double kl_forward_negexp(long j, long k);

/// Closed-form D(g_j || g_{j,k}).
double kl_reverse_negexp(long j, long k);

/// Symmetrized divergence; the two closed forms telescope to exactly j/k.
KlResult kl_distance(long j, long k);

/// Numerical D(p || q) = int p log(p/q) over [lo, hi] by adaptive quadrature;
/// endpoints may be infinite.  Points with p = 0 contribute zero; a vanishing
/// q where p > 0 raises NonFiniteIntegrandError.  The depth cap keeps nodes
/// far enough from support endpoints that q does not underflow to zero there.
double kl_quadrature(const std::function<double(double)>& p,
                     const std::function<double(double)>& q, double lo, double hi,
                     double abs_tol = 1e-10, int max_depth = 40);

} // namespace recjoint
