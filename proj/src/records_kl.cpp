#include "recjoint/records_kl.hpp"

#include <cmath>

#include "recjoint/errors.hpp"
#include "recjoint/quadrature.hpp"
#include "recjoint/specfun.hpp"

namespace recjoint {
namespace {

void require_order(long j, long k, const char* who) {
    if (j < 1) {
        throw DomainError(std::string(who) + ": indices must be positive");
    }
    if (!(j < k)) {
        throw OrderingError(std::string(who) + ": indices must be strictly increasing");
    }
}

} // namespace

double kl_forward_negexp(long j, long k) {
    require_order(j, k, "kl_forward_negexp");
    const double dj = static_cast<double>(j);
    const double dk = static_cast<double>(k);
    const double c = dk - dj;
    return std::log(dk / c) + digamma(1.0) + (dj / c) * digamma(1.0 + dk / c) -
           (dk / c) * digamma(1.0 + dj / c);
}

double kl_reverse_negexp(long j, long k) {
    require_order(j, k, "kl_reverse_negexp");
    const double dj = static_cast<double>(j);
    const double dk = static_cast<double>(k);
    const double c = dk - dj;
    return -std::log(dk / c) - digamma(1.0) + digamma(1.0 + dj / c);
}

KlResult kl_distance(long j, long k) {
    const double fwd = kl_forward_negexp(j, k);
    const double rev = kl_reverse_negexp(j, k);
    return {fwd, rev, fwd + rev};
}

double kl_quadrature(const std::function<double(double)>& p,
                     const std::function<double(double)>& q, double lo, double hi,
                     double abs_tol, int max_depth) {
    auto integrand = [&p, &q](double x) {
        const double pv = p(x);
        if (!(pv >= 0.0) || !std::isfinite(pv)) {
            throw NonFiniteIntegrandError("kl_quadrature: invalid density p at x = " +
                                          std::to_string(x));
        }
        if (pv == 0.0) {
            return 0.0;
        }
        const double qv = q(x);
        if (!(qv > 0.0) || !std::isfinite(qv)) {
            throw NonFiniteIntegrandError(
                "kl_quadrature: q vanishes or is invalid where p > 0, at x = " +
                std::to_string(x));
        }
        return pv * (std::log(pv) - std::log(qv));
    };
    return integrate(integrand, lo, hi, abs_tol, max_depth).value;
}

} // namespace recjoint
