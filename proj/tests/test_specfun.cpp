#include <doctest.h>

#include <cmath>
#include <limits>

#include "recjoint/errors.hpp"
#include "recjoint/quadrature.hpp"
#include "recjoint/specfun.hpp"

using namespace recjoint;

namespace {
constexpr double kGamma = 0.57721566490153286;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.141592653589793238462643383279503;
} // namespace

TEST_CASE("digamma at classical points") {
    CHECK(digamma(1.0) == doctest::Approx(-kGamma).epsilon(1e-13));
    CHECK(digamma(0.5) == doctest::Approx(-1.9635100260214235).epsilon(1e-12));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - kGamma).epsilon(1e-13));
    CHECK(digamma(10.0) == doctest::Approx(2.2517525890667211).epsilon(1e-12));
}

TEST_CASE("digamma recurrence psi(x+1) = psi(x) + 1/x") {
    for (double x : {0.1, 0.7, 1.3, 2.5, 7.0, 25.0, 123.4}) {
        CHECK(digamma(x + 1.0) ==
              doctest::Approx(digamma(x) + 1.0 / x).epsilon(1e-12));
    }
}

TEST_CASE("digamma rejects the nonpositive axis") {
    CHECK_THROWS_AS(digamma(0.0), DomainError);
    CHECK_THROWS_AS(digamma(-1.5), DomainError);
}

TEST_CASE("kolmogorov limit df values") {
    CHECK(kolmogorov_limit_cdf(0.0) == 0.0);
    CHECK(kolmogorov_limit_cdf(0.1) == 0.0);
    CHECK(kolmogorov_limit_cdf(1.358) ==
          doctest::Approx(0.9499732026655530).epsilon(1e-12));
    CHECK(kolmogorov_limit_cdf(0.5) ==
          doctest::Approx(0.0360547562).epsilon(1e-7));
    CHECK_THROWS_AS(kolmogorov_limit_cdf(-0.1), DomainError);
}

TEST_CASE("kolmogorov limit df is monotone and bounded") {
    double prev = 0.0;
    for (double x = 0.2; x < 3.0; x += 0.05) {
        const double v = kolmogorov_limit_cdf(x);
        CHECK(v >= prev);
        CHECK(v <= 1.0);
        prev = v;
    }
    CHECK(kolmogorov_limit_cdf(5.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("standard normal df and quantile") {
    CHECK(std_normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std_normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
    CHECK(std_normal_quantile(0.975) ==
          doctest::Approx(1.959963984540054).epsilon(1e-9));
    for (double p : {0.001, 0.1, 0.3, 0.5, 0.77, 0.995}) {
        CHECK(std_normal_cdf(std_normal_quantile(p)) ==
              doctest::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("quadrature on smooth finite integrals") {
    const QuadResult r1 = integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    const QuadResult r2 = integrate([](double x) { return std::sin(x); }, 0.0, kPi);
    CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("quadrature over half and full infinite ranges") {
    const QuadResult left = integrate([](double x) { return std::exp(x); }, -kInf, 0.0);
    CHECK(left.value == doctest::Approx(1.0).epsilon(1e-12));
    const QuadResult right =
        integrate([](double x) { return std::exp(-x); }, 0.0, kInf);
    CHECK(right.value == doctest::Approx(1.0).epsilon(1e-12));
    const QuadResult both =
        integrate([](double x) { return std::exp(-x * x); }, -kInf, kInf);
    CHECK(both.value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("quadrature orientation and endpoint behavior") {
    const QuadResult fwd = integrate([](double x) { return x; }, 0.0, 2.0);
    const QuadResult rev = integrate([](double x) { return x; }, 2.0, 0.0);
    CHECK(fwd.value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(rev.value == doctest::Approx(-2.0).epsilon(1e-13));
    // Integrable endpoint singularity.
    const QuadResult lg = integrate([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(lg.value == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("quadrature with interior breakpoints") {
    const QuadResult r = integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0,
                                   {0.3}, 1e-12, 60);
    const double expect = 0.3 * 0.3 / 2.0 + 0.7 * 0.7 / 2.0;
    CHECK(r.value == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("quadrature rejects non-finite integrands") {
    CHECK_THROWS_AS(
        integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0,
                  1.0),
        NonFiniteIntegrandError);
}
