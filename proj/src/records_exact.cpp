#include "recjoint/records_exact.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "recjoint/errors.hpp"
#include "recjoint/quadrature.hpp"

namespace recjoint {
namespace {

void require_nonpositive(double x, const char* who) {
    if (!(x <= 0.0)) {
        throw DomainError(std::string(who) + ": coordinates must be nonpositive");
    }
}

void require_order(long j, long k, const char* who) {
    if (j < 1) {
        throw DomainError(std::string(who) + ": indices must be positive");
    }
    if (!(j < k)) {
        throw OrderingError(std::string(who) + ": indices must be strictly increasing");
    }
}

} // namespace

RecordIndexSet::RecordIndexSet(std::vector<long> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) {
        throw EmptyInputError("RecordIndexSet: at least one position required");
    }
    if (indices_.front() < 1) {
        throw DomainError("RecordIndexSet: positions must be >= 1");
    }
    for (size_t i = 1; i < indices_.size(); ++i) {
        if (indices_[i] <= indices_[i - 1]) {
            throw OrderingError("RecordIndexSet: positions must be strictly increasing");
        }
    }
}

double record_event_probability(const RecordIndexSet& idx) {
    double p = 1.0;
    for (long j : idx.indices()) {
        p /= static_cast<double>(j);
    }
    return p;
}

double single_record_cdf(const UnivariateLaw& law, long n, double x) {
    if (n < 1) {
        throw DomainError("single_record_cdf: n must be positive");
    }
    const double lc = law.log_cdf(x);
    return std::exp(static_cast<double>(n) * lc);
}

double single_record_pdf(const UnivariateLaw& law, long j, double x) {
    if (j < 1) {
        throw DomainError("single_record_pdf: j must be positive");
    }
    const double f = law.pdf(x);
    if (f == 0.0) return 0.0;
    if (j == 1) return f;
    const double lc = law.log_cdf(x);
    return static_cast<double>(j) * f * std::exp(static_cast<double>(j - 1) * lc);
}

double pair_record_cdf_negexp(long j, long k, double x1, double x2) {
    require_order(j, k, "pair_record_cdf_negexp");
    require_nonpositive(x1, "pair_record_cdf_negexp");
    require_nonpositive(x2, "pair_record_cdf_negexp");
    // Folding x1 down to min(x1, x2) merges both orderings into one formula:
    // at x1 >= x2 it collapses to e^{k x2}.
    const double a2 = x2;
    const double a1 = std::min(x1, a2);
    const double dj = static_cast<double>(j);
    const double dk = static_cast<double>(k);
    const double c = dk - dj;
    return (dk / c) * std::exp(c * a2 + dj * a1) - (dj / c) * std::exp(dk * a1);
}

double pair_record_cdf(const UnivariateLaw& law, long j, long k, double y1, double y2) {
    require_order(j, k, "pair_record_cdf");
    const double e1 = law.to_negexp(y1);
    const double e2 = law.to_negexp(y2);
    if (e2 == -std::numeric_limits<double>::infinity() ||
        e1 == -std::numeric_limits<double>::infinity()) {
        return 0.0;
    }
    return pair_record_cdf_negexp(j, k, e1, e2);
}

double pair_marginal_early(long j, long k, double x) {
    require_order(j, k, "pair_marginal_early");
    require_nonpositive(x, "pair_marginal_early");
    const double dj = static_cast<double>(j);
    const double dk = static_cast<double>(k);
    return (dk * std::exp(dj * x) - dj * std::exp(dk * x)) / (dk - dj);
}

double pair_marginal_late(long j, long k, double x) {
    require_order(j, k, "pair_marginal_late");
    require_nonpositive(x, "pair_marginal_late");
    return std::exp(static_cast<double>(k) * x);
}

double pair_record_pdf(const UnivariateLaw& law, long j, long k, double x) {
    require_order(j, k, "pair_record_pdf");
    const double f = law.pdf(x);
    if (f == 0.0) return 0.0;
    const double dj = static_cast<double>(j);
    const double dk = static_cast<double>(k);
    const double lc = law.log_cdf(x);
    if (lc == -std::numeric_limits<double>::infinity()) {
        // F = 0: only the j = 1 branch survives through F^0 = 1.
        return j == 1 ? dk / (dk - 1.0) * f : 0.0;
    }
    // F^{j-1} - F^{k-1} = F^{j-1} (1 - F^{k-j}), kept accurate near F = 1.
    const double diff = std::exp(static_cast<double>(j - 1) * lc) *
                        (-std::expm1((dk - dj) * lc));
    return dj * dk / (dk - dj) * f * diff;
}

double triple_record_cdf_negexp(long j, long k, long r, double x1, double x2, double x3) {
    require_order(j, k, "triple_record_cdf_negexp");
    require_order(k, r, "triple_record_cdf_negexp");
    require_nonpositive(x1, "triple_record_cdf_negexp");
    require_nonpositive(x2, "triple_record_cdf_negexp");
    require_nonpositive(x3, "triple_record_cdf_negexp");
    // Same folding device as the pair case, applied right to left.
    const double a3 = std::min(x3, 0.0);
    const double a2 = std::min(x2, a3);
    const double a1 = std::min(x1, a2);
    const double dj = static_cast<double>(j);
    const double dk = static_cast<double>(k);
    const double dr = static_cast<double>(r);
    const double ckj = dk - dj;
    const double crk = dr - dk;
    const double crj = dr - dj;
    const double lead = dk * dr / (ckj * crk);
    const double term1 =
        std::exp(dj * a1) *
        (std::exp(crk * a3 + ckj * a2) - (ckj / crj) * std::exp(crj * a2));
    const double term2 = (dj / dk) * std::exp(dk * a1 + crk * a3);
    const double term3 = (dj * ckj / (dr * crj)) * std::exp(dr * a1);
    return lead * (term1 - term2 + term3);
}

double d_record_cdf_negexp(const RecordIndexSet& idx, const std::vector<double>& xs) {
    const int d = idx.dim();
    if (static_cast<int>(xs.size()) != d) {
        throw DimensionError("d_record_cdf_negexp: one bound per position required");
    }
    if (d > 5) {
        throw DimensionError("d_record_cdf_negexp: dimension capped at 5");
    }
    for (double x : xs) {
        require_nonpositive(x, "d_record_cdf_negexp");
    }
    const std::vector<long>& js = idx.indices();
    // Block sizes b_m = j_m - j_{m-1}; the block maxima are independent with
    // df t^{b_m} on (0, 1] after t = e^x, and the conditioned df integrates
    // the increasing-ordering region level by level.
    std::vector<double> blocks(d);
    long prev = 0;
    for (int m = 0; m < d; ++m) {
        blocks[m] = static_cast<double>(js[m] - prev);
        prev = js[m];
    }
    const double b1 = blocks[0];
    const double x1 = xs[0];
    std::function<double(double)> level = [b1, x1](double u) {
        return std::exp(b1 * std::min(x1, u));
    };
    const double level_tol = 1e-11;
    for (int m = 1; m < d; ++m) {
        const double bm = blocks[m];
        const double xm = xs[m];
        std::vector<double> kinks;
        for (int i = 0; i < m; ++i) {
            kinks.push_back(std::exp(xs[i]));
        }
        std::function<double(double)> inner = level;
        level = [inner, bm, xm, kinks, level_tol](double u) {
            const double upper = std::exp(std::min(xm, u));
            auto kernel = [&inner, bm](double t) {
                return bm * std::pow(t, bm - 1.0) * inner(std::log(t));
            };
            return integrate(kernel, 0.0, upper, kinks, level_tol).value;
        };
    }
    double scale = 1.0;
    for (int m = 1; m < d; ++m) {
        scale *= static_cast<double>(js[m]) / blocks[m];
    }
    return scale * level(0.0);
}

} // namespace recjoint
