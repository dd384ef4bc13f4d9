#include <doctest.h>

#include <cmath>
#include <limits>

#include "recjoint/errors.hpp"
#include "recjoint/records_exact.hpp"
#include "recjoint/records_kl.hpp"

using namespace recjoint;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLog2 = std::log(2.0);
} // namespace

TEST_CASE("closed-form divergences at pinned pairs") {
    const KlResult d12 = kl_distance(1, 2);
    CHECK(d12.forward == doctest::Approx(kLog2 - 0.5).epsilon(1e-13));
    CHECK(d12.reverse == doctest::Approx(1.0 - kLog2).epsilon(1e-13));
    CHECK(d12.distance == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(kl_distance(3, 4).distance == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(kl_distance(1, 1000).distance == doctest::Approx(0.001).epsilon(1e-9));
}

TEST_CASE("divergences are positive and the sum telescopes to j/k") {
    for (long j = 1; j <= 9; ++j) {
        for (long k = j + 1; k <= 10; ++k) {
            const KlResult d = kl_distance(j, k);
            CHECK(d.forward > 0.0);
            CHECK(d.reverse > 0.0);
            CHECK(d.distance ==
                  doctest::Approx(static_cast<double>(j) / static_cast<double>(k))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("closed forms validate their indices") {
    CHECK_THROWS_AS(kl_forward_negexp(2, 2), OrderingError);
    CHECK_THROWS_AS(kl_reverse_negexp(5, 3), OrderingError);
    CHECK_THROWS_AS(kl_forward_negexp(0, 3), DomainError);
}

TEST_CASE("quadrature reproduces the closed forms on the canonical law") {
    const UnivariateLaw law = UnivariateLaw::negexp();
    for (auto [j, k] : {std::pair<long, long>{1, 2}, {2, 5}, {3, 7}}) {
        auto p = [&law, j = j, k = k](double y) { return pair_record_pdf(law, j, k, y); };
        auto q = [&law, j = j](double y) { return single_record_pdf(law, j, y); };
        CHECK(kl_quadrature(p, q, -kInf, 0.0, 1e-10) ==
              doctest::Approx(kl_forward_negexp(j, k)).epsilon(1e-8));
        CHECK(kl_quadrature(q, p, -kInf, 0.0, 1e-10) ==
              doctest::Approx(kl_reverse_negexp(j, k)).epsilon(1e-8));
    }
}

TEST_CASE("divergences are invariant under the choice of margins") {
    // The same information numbers arise under any continuous law.
    for (const UnivariateLaw& law :
         {UnivariateLaw::uniform(), UnivariateLaw::stdexp()}) {
        auto p = [&law](double y) { return pair_record_pdf(law, 1, 2, y); };
        auto q = [&law](double y) { return single_record_pdf(law, 1, y); };
        const double fwd =
            kl_quadrature(p, q, law.lower_endpoint(), law.upper_endpoint(), 1e-9);
        CHECK(fwd == doctest::Approx(0.1931472).epsilon(1e-6));
    }
}

TEST_CASE("quadrature rejects invalid densities") {
    auto bad_p = [](double) { return -1.0; };
    auto ok_q = [](double) { return 1.0; };
    CHECK_THROWS_AS(kl_quadrature(bad_p, ok_q, 0.0, 1.0), NonFiniteIntegrandError);
    auto nan_p = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(kl_quadrature(nan_p, ok_q, 0.0, 1.0), NonFiniteIntegrandError);
    // q vanishing where p has mass is an invalid reference density.
    auto ok_p = [](double) { return 1.0; };
    auto zero_q = [](double) { return 0.0; };
    CHECK_THROWS_AS(kl_quadrature(ok_p, zero_q, 0.0, 1.0), NonFiniteIntegrandError);
}
