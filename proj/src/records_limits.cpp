#include "recjoint/records_limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "recjoint/errors.hpp"

namespace recjoint {
namespace {

const double kInf = std::numeric_limits<double>::infinity();

void require_dim(const LambdaVector& lv, int d, const char* who) {
    if (lv.dim() != d) {
        throw DimensionError(std::string(who) + ": expected " + std::to_string(d) +
                             " rates, got " + std::to_string(lv.dim()));
    }
}

void require_nonpositive(double x, const char* who) {
    if (!(x <= 0.0)) {
        throw DomainError(std::string(who) + ": coordinates must be nonpositive");
    }
}

// Pair df on folded coordinates a1 <= a2 <= 0; at a1 = a2 it collapses to
// e^{l2 a2}, which covers the reversed-ordering branch.
double pair_form(double l1, double l2, double a1, double a2) {
    const double b1 = l1 / (l2 - l1);
    const double b2 = l2 / (l2 - l1);
    return b2 * std::exp(l1 * a1 + (l2 - l1) * a2) - b1 * std::exp(l2 * a1);
}

} // namespace

LambdaVector::LambdaVector(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
    if (lambdas_.empty()) {
        throw EmptyInputError("LambdaVector: at least one rate required");
    }
    if (!(lambdas_.front() > 0.0)) {
        throw DomainError("LambdaVector: rates must be positive");
    }
    for (size_t i = 1; i < lambdas_.size(); ++i) {
        if (!(lambdas_[i] > lambdas_[i - 1])) {
            throw OrderingError("LambdaVector: rates must be strictly increasing");
        }
    }
}

double limit_pair_cdf(const LambdaVector& lv, double x1, double x2) {
    require_dim(lv, 2, "limit_pair_cdf");
    require_nonpositive(x1, "limit_pair_cdf");
    require_nonpositive(x2, "limit_pair_cdf");
    const double a2 = std::min(x2, 0.0);
    const double a1 = std::min(x1, a2);
    return pair_form(lv[0], lv[1], a1, a2);
}

std::array<double, 2> limit_pair_marginals(const LambdaVector& lv, double x) {
    require_dim(lv, 2, "limit_pair_marginals");
    require_nonpositive(x, "limit_pair_marginals");
    const double l1 = lv[0];
    const double l2 = lv[1];
    const double b1 = l1 / (l2 - l1);
    const double b2 = l2 / (l2 - l1);
    return {b2 * std::exp(l1 * x) - b1 * std::exp(l2 * x), std::exp(l2 * x)};
}

LimitPairMoments limit_pair_moments(const LambdaVector& lv) {
    require_dim(lv, 2, "limit_pair_moments");
    const double l1 = lv[0];
    const double l2 = lv[1];
    LimitPairMoments m;
    m.mean_early = -1.0 / l1 - 1.0 / l2;
    m.mean_late = -1.0 / l2;
    m.var_early = 1.0 / (l1 * l1) + 1.0 / (l2 * l2);
    m.var_late = 1.0 / (l2 * l2);
    m.covariance = 1.0 / (l2 * l2);
    m.correlation = l1 / std::sqrt(l1 * l1 + l2 * l2);
    m.expected_sq_gap = 2.0 / (l1 * l1);
    return m;
}

double limit_pair_cdf_general(const GevParams& G, const LambdaVector& lv, double y1,
                              double y2) {
    require_dim(lv, 2, "limit_pair_cdf_general");
    const double g1 = G.cdf(y1);
    const double g2 = G.cdf(y2);
    if (g1 <= 0.0 || g2 <= 0.0) {
        return 0.0;
    }
    const double a2 = std::log(g2);
    const double a1 = std::min(std::log(g1), a2);
    return pair_form(lv[0], lv[1], a1, a2);
}

double limit_pair_cdf_general(const UnivariateLaw& G, const LambdaVector& lv, double y1,
                              double y2) {
    require_dim(lv, 2, "limit_pair_cdf_general");
    const double g1 = G.cdf(y1);
    const double g2 = G.cdf(y2);
    if (g1 <= 0.0 || g2 <= 0.0) {
        return 0.0;
    }
    const double a2 = std::log(g2);
    const double a1 = std::min(std::log(g1), a2);
    return pair_form(lv[0], lv[1], a1, a2);
}

double conditional_exceedance_limit(const GevParams& G, const LambdaVector& lv, double u,
                                    double y) {
    require_dim(lv, 2, "conditional_exceedance_limit");
    if (!(y > u)) {
        throw DomainError("conditional_exceedance_limit: y must exceed u");
    }
    const double l1 = lv[0];
    const double l2 = lv[1];
    const double gu = G.cdf(u);
    // P(early > u) = 1 - H1(u).
    double h1u = 0.0;
    if (gu > 0.0) {
        const double xu = std::log(gu);
        const double b1 = l1 / (l2 - l1);
        const double b2 = l2 / (l2 - l1);
        h1u = b2 * std::exp(l1 * xu) - b1 * std::exp(l2 * xu);
    }
    const double denom = 1.0 - h1u;
    if (denom <= 0.0) {
        throw DegenerateConditionError(
            "conditional_exceedance_limit: threshold at or above the upper endpoint");
    }
    const double gy = G.cdf(y);
    const double h2y = gy > 0.0 ? std::exp(l2 * std::log(gy)) : 0.0;
    const double joint = limit_pair_cdf_general(G, lv, u, y);
    double num = h2y - joint;
    if (num < 0.0) num = 0.0;
    return num / denom;
}

double limit_triple_cdf(const LambdaVector& lv, double x1, double x2, double x3) {
    require_dim(lv, 3, "limit_triple_cdf");
    require_nonpositive(x1, "limit_triple_cdf");
    require_nonpositive(x2, "limit_triple_cdf");
    require_nonpositive(x3, "limit_triple_cdf");
    const double l1 = lv[0];
    const double l2 = lv[1];
    const double l3 = lv[2];
    const double a3 = std::min(x3, 0.0);
    const double a2 = std::min(x2, a3);
    const double a1 = std::min(x1, a2);
    const double b1 = l1 / (l2 - l1);
    const double b2 = l2 / (l2 - l1);
    const double b3 = l1 / (l3 - l1);
    const double b4 = l2 / (l3 - l2);
    const double b5 = l3 / (l3 - l1);
    const double b6 = l3 / (l3 - l2);
    const double d32 = l3 - l2;
    return std::exp(l1 * a1 + (l2 - l1) * a2) *
               (b2 * b6 * std::exp(d32 * a3) - b4 * b5 * std::exp(d32 * a2)) -
           std::exp(l2 * a1) *
               (b1 * b6 * std::exp(d32 * a3) - b3 * b4 * std::exp(d32 * a1));
}

double limit_triple_cdf_alt(const LambdaVector& lv, double x1, double x2, double x3) {
    require_dim(lv, 3, "limit_triple_cdf_alt");
    require_nonpositive(x1, "limit_triple_cdf_alt");
    require_nonpositive(x2, "limit_triple_cdf_alt");
    require_nonpositive(x3, "limit_triple_cdf_alt");
    const double l1 = lv[0];
    const double l2 = lv[1];
    const double l3 = lv[2];
    const double a3 = std::min(x3, 0.0);
    const double a2 = std::min(x2, a3);
    const double a1 = std::min(x1, a2);
    const double b1 = l1 / (l2 - l1);
    const double b2 = l2 / (l2 - l1);
    const double b3 = l1 / (l3 - l1);
    const double b4 = l2 / (l3 - l2);
    const double b5 = l3 / (l3 - l1);
    const double b6 = l3 / (l3 - l2);
    const double d31 = l3 - l1;
    const double d32 = l3 - l2;
    return std::exp(l1 * a1 + (l2 - l1) * a2) *
               (b2 * b6 * std::exp(d31 * a3) - b4 * b5 * std::exp(d31 * a2)) -
           std::exp(l2 * a1) *
               (b1 * b6 * std::exp(d32 * a3) - b3 * b4 * std::exp(d32 * a1));
}

std::array<double, 9> limit_triple_cov(const LambdaVector& lv) {
    require_dim(lv, 3, "limit_triple_cov");
    const double v1 = 1.0 / (lv[0] * lv[0]);
    const double v2 = 1.0 / (lv[1] * lv[1]);
    const double v3 = 1.0 / (lv[2] * lv[2]);
    return {v1 + v2 + v3, v2 + v3, v3,
            v2 + v3,      v2 + v3, v3,
            v3,           v3,      v3};
}

std::vector<double> limit_chain_means(const LambdaVector& lv) {
    std::vector<double> means(lv.dim());
    double tail = 0.0;
    for (int i = lv.dim() - 1; i >= 0; --i) {
        tail -= 1.0 / lv[i];
        means[i] = tail;
    }
    return means;
}

double limit_increments_cdf(const LambdaVector& lv, const std::vector<double>& ys) {
    if (lv.dim() < 2) {
        throw DimensionError("limit_increments_cdf: at least two rates required");
    }
    if (static_cast<int>(ys.size()) != lv.dim() - 1) {
        throw DimensionError("limit_increments_cdf: expected d-1 increment bounds");
    }
    double p = 1.0;
    for (size_t i = 0; i < ys.size(); ++i) {
        if (!(ys[i] > 0.0)) {
            throw DomainError("limit_increments_cdf: bounds must be positive");
        }
        p *= ys[i] == kInf ? 1.0 : -std::expm1(-lv[static_cast<int>(i)] * ys[i]);
    }
    return p;
}

double limit_record_increment_joint(const LambdaVector& lv, double x, double y) {
    require_dim(lv, 2, "limit_record_increment_joint");
    require_nonpositive(x, "limit_record_increment_joint");
    if (!(y > 0.0)) {
        throw DomainError("limit_record_increment_joint: increment bound must be positive");
    }
    const double l1 = lv[0];
    const double l2 = lv[1];
    const double b1 = l1 / (l2 - l1);
    const double b2 = l2 / (l2 - l1);
    if (y <= -x) {
        return b1 * std::expm1((l2 - l1) * y) * std::exp(l2 * x);
    }
    return b2 * std::exp(l1 * x) - b1 * std::exp(l2 * x) - std::exp(-l1 * y);
}

} // namespace recjoint
