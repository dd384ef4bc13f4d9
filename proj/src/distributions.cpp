#include "recjoint/distributions.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "recjoint/errors.hpp"

namespace recjoint {
namespace {

const double kInf = std::numeric_limits<double>::infinity();

} // namespace

double gev_cdf(double alpha, double x) {
    if (alpha == 0.0) {
        return std::exp(-std::exp(-x));
    }
    const double z = 1.0 + alpha * x;
    if (z <= 0.0) {
        return alpha > 0.0 ? 0.0 : 1.0;
    }
    return std::exp(-std::pow(z, -1.0 / alpha));
}

double gev_pdf(double alpha, double x) {
    if (alpha == 0.0) {
        return std::exp(-x - std::exp(-x));
    }
    const double z = 1.0 + alpha * x;
    if (z <= 0.0) {
        return 0.0;
    }
    return std::pow(z, -1.0 / alpha - 1.0) * std::exp(-std::pow(z, -1.0 / alpha));
}

UnivariateLaw UnivariateLaw::stdexp() { return {LawId::stdexp, 0.0}; }
UnivariateLaw UnivariateLaw::negexp() { return {LawId::negexp, 0.0}; }
UnivariateLaw UnivariateLaw::uniform() { return {LawId::uniform, 0.0}; }
UnivariateLaw UnivariateLaw::gev(double alpha) { return {LawId::gev, alpha}; }

UnivariateLaw UnivariateLaw::parse(const std::string& text) {
    if (text == "stdexp") return stdexp();
    if (text == "negexp") return negexp();
    if (text == "uniform") return uniform();
    if (text.rfind("gev:", 0) == 0) {
        try {
            size_t used = 0;
            const double alpha = std::stod(text.substr(4), &used);
            if (used == text.size() - 4 && std::isfinite(alpha)) {
                return gev(alpha);
            }
        } catch (const std::exception&) {
        }
    }
    throw UnsupportedLawError("unknown law '" + text +
                              "' (expected stdexp|negexp|uniform|gev:<alpha>)");
}

std::string UnivariateLaw::name() const {
    switch (id_) {
        case LawId::stdexp: return "stdexp";
        case LawId::negexp: return "negexp";
        case LawId::uniform: return "uniform";
        case LawId::gev: break;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "gev:%.17g", alpha_);
    return buf;
}

double UnivariateLaw::cdf(double x) const {
    switch (id_) {
        case LawId::stdexp:
            return x <= 0.0 ? 0.0 : -std::expm1(-x);
        case LawId::negexp:
            return x >= 0.0 ? 1.0 : std::exp(x);
        case LawId::uniform:
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return x;
        case LawId::gev:
            return gev_cdf(alpha_, x);
    }
    return 0.0;
}

double UnivariateLaw::pdf(double x) const {
    switch (id_) {
        case LawId::stdexp:
            return x < 0.0 ? 0.0 : std::exp(-x);
        case LawId::negexp:
            return x > 0.0 ? 0.0 : std::exp(x);
        case LawId::uniform:
            return (x < 0.0 || x > 1.0) ? 0.0 : 1.0;
        case LawId::gev:
            return gev_pdf(alpha_, x);
    }
    return 0.0;
}

double UnivariateLaw::log_cdf(double x) const {
    switch (id_) {
        case LawId::stdexp:
            return x <= 0.0 ? -kInf : std::log1p(-std::exp(-x));
        case LawId::negexp:
            return x >= 0.0 ? 0.0 : x;
        case LawId::uniform:
            if (x <= 0.0) return -kInf;
            if (x >= 1.0) return 0.0;
            return std::log(x);
        case LawId::gev: {
            if (alpha_ == 0.0) {
                return -std::exp(-x);
            }
            const double z = 1.0 + alpha_ * x;
            if (z <= 0.0) {
                return alpha_ > 0.0 ? -kInf : 0.0;
            }
            return -std::exp(-std::log(z) / alpha_);
        }
    }
    return -kInf;
}

double UnivariateLaw::quantile(double q) const {
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError("quantile: level must lie in (0, 1)");
    }
    switch (id_) {
        case LawId::stdexp:
            return -std::log1p(-q);
        case LawId::negexp:
            return std::log(q);
        case LawId::uniform:
            return q;
        case LawId::gev: {
            const double w = -std::log(q);
            if (alpha_ == 0.0) {
                return -std::log(w);
            }
            return std::expm1(-alpha_ * std::log(w)) / alpha_;
        }
    }
    return 0.0;
}

double UnivariateLaw::lower_endpoint() const {
    switch (id_) {
        case LawId::stdexp: return 0.0;
        case LawId::negexp: return -kInf;
        case LawId::uniform: return 0.0;
        case LawId::gev: return alpha_ > 0.0 ? -1.0 / alpha_ : -kInf;
    }
    return -kInf;
}

double UnivariateLaw::upper_endpoint() const {
    switch (id_) {
        case LawId::stdexp: return kInf;
        case LawId::negexp: return 0.0;
        case LawId::uniform: return 1.0;
        case LawId::gev: return alpha_ < 0.0 ? -1.0 / alpha_ : kInf;
    }
    return kInf;
}

double UnivariateLaw::from_negexp(double eta) const {
    if (eta > 0.0) {
        throw DomainError("from_negexp: eta must be nonpositive");
    }
    if (eta == 0.0) {
        return upper_endpoint();
    }
    if (eta == -kInf) {
        return lower_endpoint();
    }
    return quantile(std::exp(eta));
}

double UnivariateLaw::to_negexp(double y) const {
    return log_cdf(y);
}

NormingConstants norming_constants(const UnivariateLaw& law, long n) {
    if (n < 1) {
        throw DomainError("norming_constants: n must be positive");
    }
    const double dn = static_cast<double>(n);
    switch (law.id()) {
        case LawId::stdexp:
            return {1.0, std::log(dn), 0.0};
        case LawId::negexp:
            return {1.0 / dn, 0.0, -1.0};
        case LawId::uniform:
            return {1.0 / dn, 1.0, -1.0};
        case LawId::gev: {
            const double alpha = law.alpha();
            if (alpha == 0.0) {
                return {1.0, std::log(dn), 0.0};
            }
            const double na = std::pow(dn, alpha);
            return {na, (na - 1.0) / alpha, alpha};
        }
    }
    throw UnsupportedLawError("norming_constants: unsupported law");
}

double attracting_limit_cdf(const UnivariateLaw& law, double x) {
    switch (law.id()) {
        case LawId::stdexp:
            return gev_cdf(0.0, x);
        case LawId::gev:
            return gev_cdf(law.alpha(), x);
        case LawId::negexp:
        case LawId::uniform:
            // Constants above carry no centering shift, so the limit is the
            // negative-exponential df itself rather than the literal G_{-1}.
            return x >= 0.0 ? 1.0 : std::exp(x);
    }
    throw UnsupportedLawError("attracting_limit_cdf: unsupported law");
}

} // namespace recjoint
