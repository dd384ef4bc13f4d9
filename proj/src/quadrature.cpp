#include "recjoint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "recjoint/errors.hpp"

namespace recjoint {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
const double kXgk[8] = {0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
                        0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
                        0.2077849550078985, 0.0};
const double kWgk[8] = {0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
                        0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
                        0.2044329400752989, 0.2094821410847278};
const double kWg[4] = {0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
                       0.4179591836734694};

struct Panel {
    double a, b, value, error;
};

void check_finite(double v, double x) {
    if (!std::isfinite(v)) {
        throw NonFiniteIntegrandError("integrand is not finite at x = " + std::to_string(x));
    }
}

Panel eval_panel(const std::function<double(double)>& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kron = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(c);
            check_finite(fsum, c);
            ++evals;
        } else {
            const double x1 = c - h * kXgk[i];
            const double x2 = c + h * kXgk[i];
            const double f1 = f(x1);
            const double f2 = f(x2);
            check_finite(f1, x1);
            check_finite(f2, x2);
            evals += 2;
            fsum = f1 + f2;
        }
        kron += kWgk[i] * fsum;
        if (i % 2 == 1) {
            gauss += kWg[i / 2] * fsum;
        }
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, std::abs(kron - gauss)};
}

QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            double abs_tol, int max_depth) {
    QuadResult out;
    if (a == b) {
        return out;
    }
    struct Item {
        Panel p;
        double tol;
        int depth;
    };
    std::vector<Item> stack;
    stack.push_back({eval_panel(f, a, b, out.evaluations), abs_tol, 0});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.p.error <= it.tol || it.depth >= max_depth) {
            out.value += it.p.value;
            out.abs_error += it.p.error;
            continue;
        }
        const double mid = 0.5 * (it.p.a + it.p.b);
        stack.push_back({eval_panel(f, it.p.a, mid, out.evaluations), 0.5 * it.tol, it.depth + 1});
        stack.push_back({eval_panel(f, mid, it.p.b, out.evaluations), 0.5 * it.tol, it.depth + 1});
    }
    return out;
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth) {
    const double inf = std::numeric_limits<double>::infinity();
    if (a > b) {
        QuadResult r = integrate(f, b, a, abs_tol, max_depth);
        r.value = -r.value;
        return r;
    }
    if (a == -inf && b == inf) {
        QuadResult lo = integrate(f, -inf, 0.0, 0.5 * abs_tol, max_depth);
        QuadResult hi = integrate(f, 0.0, inf, 0.5 * abs_tol, max_depth);
        return {lo.value + hi.value, lo.abs_error + hi.abs_error,
                lo.evaluations + hi.evaluations};
    }
    if (a == -inf) {
        // x = b + log t maps t in (0, 1] onto (-inf, b]; dx = dt / t.
        auto g = [&f, b](double t) { return f(b + std::log(t)) / t; };
        return integrate_finite(g, 0.0, 1.0, abs_tol, max_depth);
    }
    if (b == inf) {
        auto g = [&f, a](double t) { return f(a - std::log(t)) / t; };
        return integrate_finite(g, 0.0, 1.0, abs_tol, max_depth);
    }
    return integrate_finite(f, a, b, abs_tol, max_depth);
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const std::vector<double>& breakpoints, double abs_tol,
                     int max_depth) {
    std::vector<double> cuts;
    for (double p : breakpoints) {
        if (std::isfinite(p) && p > std::min(a, b) && p < std::max(a, b)) {
            cuts.push_back(p);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.empty()) {
        return integrate(f, a, b, abs_tol, max_depth);
    }
    const double sign = (a <= b) ? 1.0 : -1.0;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const double tol = abs_tol / static_cast<double>(cuts.size() + 1);
    QuadResult out;
    double left = lo;
    for (size_t i = 0; i <= cuts.size(); ++i) {
        const double right = (i < cuts.size()) ? cuts[i] : hi;
        QuadResult part = integrate(f, left, right, tol, max_depth);
        out.value += part.value;
        out.abs_error += part.abs_error;
        out.evaluations += part.evaluations;
        left = right;
    }
    out.value *= sign;
    return out;
}

} // namespace recjoint
