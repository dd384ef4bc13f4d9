#pragma once

#include <functional>
#include <vector>

namespace recjoint {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (15-point) integration on [a, b] to an absolute
/// tolerance.  Endpoints may be +/-infinity; infinite tails are mapped onto
/// (0, 1] with a logarithmic substitution, so integrands must decay at least
/// exponentially there.  Throws NonFiniteIntegrandError if the integrand
/// evaluates to NaN or infinity at any node.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-10, int max_depth = 60);

/// Same, but splits [a, b] at the given interior breakpoints first (kinks of
/// piecewise-smooth integrands); points outside (a, b) are ignored.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const std::vector<double>& breakpoints, double abs_tol = 1e-10,
                     int max_depth = 60);

} // namespace recjoint
