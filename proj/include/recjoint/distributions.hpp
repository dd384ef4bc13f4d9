#pragma once

#include <string>

namespace recjoint {

/// Extreme-value df G_alpha(x) = exp(-(1 + alpha*x)^(-1/alpha)), with the
/// alpha = 0 case exp(-exp(-x)).  Outside the support the value saturates
/// at 0 (below a finite lower endpoint) or 1 (above a finite upper endpoint).
double gev_cdf(double alpha, double x);

/// Density of G_alpha; zero outside the support.
double gev_pdf(double alpha, double x);

/// Parameter bundle for the extreme-value family.
struct GevParams {
    double alpha = 0.0;
    double cdf(double x) const { return gev_cdf(alpha, x); }
};

enum class LawId { stdexp, negexp, uniform, gev };

/// Scale/shift/shape triple normalizing sample maxima.
struct NormingConstants {
    double a_n; // scale, > 0
    double b_n; // shift
    double alpha; // limiting shape
};

/// Built-in continuous laws: standard exponential on [0, inf), standard
/// negative exponential (df e^x on (-inf, 0]), uniform on [0, 1], and the
/// extreme-value family gev:alpha.  The negative exponential is the canonical
/// internal representation; every other law is reached through the quantile
/// transform x = log F(y).
class UnivariateLaw {
public:
    static UnivariateLaw stdexp();
    static UnivariateLaw negexp();
    static UnivariateLaw uniform();
    static UnivariateLaw gev(double alpha);

    /// Parses "stdexp", "negexp", "uniform", or "gev:<alpha>".
    static UnivariateLaw parse(const std::string& text);

    LawId id() const { return id_; }
    double alpha() const { return alpha_; }
    std::string name() const;

    double cdf(double x) const;
    double pdf(double x) const;

    /// log F(x), computed without forming F (accurate where F is near 1);
    /// -infinity where F vanishes.
    double log_cdf(double x) const;

    /// Generalized inverse inf{t : F(t) >= q}, q in (0, 1).
    double quantile(double q) const;

    /// Support endpoints; +/-infinity when unbounded.
    double lower_endpoint() const;
    double upper_endpoint() const;

    /// Maps a point of the canonical negative-exponential scale into this
    /// law's scale: eta <= 0 -> F^{-1}(e^eta); eta = 0 -> upper endpoint.
    double from_negexp(double eta) const;

    /// Inverse map log F(y); -infinity where F vanishes.
    double to_negexp(double y) const;

private:
    UnivariateLaw(LawId id, double alpha) : id_(id), alpha_(alpha) {}
    LawId id_;
    double alpha_;
};

/// Norming constants (a_n, b_n, alpha) with F^n(a_n x + b_n) converging to the
/// law's attracting limit df as n grows.
NormingConstants norming_constants(const UnivariateLaw& law, long n);

/// The attracting limit df evaluated at x, matching the constants above.  For
/// stdexp and gev:alpha this is G_alpha; for uniform and negexp (whose
/// constants carry no centering shift) it is the negative-exponential df
/// e^{min(x,0)}, a location-shifted member of the alpha = -1 type.
double attracting_limit_cdf(const UnivariateLaw& law, double x);

} // namespace recjoint
