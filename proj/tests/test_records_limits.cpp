#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "recjoint/errors.hpp"
#include "recjoint/records_exact.hpp"
#include "recjoint/records_limits.hpp"

using namespace recjoint;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

TEST_CASE("rate vectors validate their input") {
    CHECK(LambdaVector({0.5, 3.0}).dim() == 2);
    CHECK_THROWS_AS(LambdaVector({}), EmptyInputError);
    CHECK_THROWS_AS(LambdaVector({-1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(LambdaVector({0.0, 2.0}), DomainError);
    CHECK_THROWS_AS(LambdaVector({2.0, 1.0}), OrderingError);
    CHECK_THROWS_AS(LambdaVector({1.0, 1.0}), OrderingError);
}

TEST_CASE("limiting pair df at pinned points") {
    const LambdaVector lv({1.0, 2.0});
    CHECK(limit_pair_cdf(lv, -1.0, -0.5) ==
          doctest::Approx(0.310925037060246966).epsilon(1e-15));
    CHECK(limit_pair_cdf(lv, 0.0, -1.0) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(limit_pair_cdf(lv, 0.0, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("limiting pair df at integer rates equals the finite-index df") {
    for (auto [j, k] : {std::pair<long, long>{1, 2}, {2, 5}, {3, 4}}) {
        const LambdaVector lv({static_cast<double>(j), static_cast<double>(k)});
        for (double x1 = -2.5; x1 <= 0.0; x1 += 0.5) {
            for (double x2 = -2.5; x2 <= 0.0; x2 += 0.5) {
                CHECK(limit_pair_cdf(lv, x1, x2) ==
                      doctest::Approx(pair_record_cdf_negexp(j, k, x1, x2))
                          .epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("limiting pair df is continuous across the ordering fold") {
    const LambdaVector lv({0.7, 2.3});
    for (double a : {-2.0, -1.1, -0.4, -0.05}) {
        const double eps = 1e-9;
        const double at = limit_pair_cdf(lv, a, a);
        const double above = limit_pair_cdf(lv, a + eps, a);
        const double below = limit_pair_cdf(lv, a - eps, a);
        CHECK(std::abs(above - at) < 1e-8);
        CHECK(std::abs(below - at) < 1e-8);
        // Once x1 exceeds x2 the df must be flat in x1 (within the domain).
        CHECK(limit_pair_cdf(lv, std::min(a + 0.3, 0.0), a) ==
              doctest::Approx(at).epsilon(1e-15));
    }
}

TEST_CASE("limiting pair marginals at pinned points") {
    const auto m = limit_pair_marginals(LambdaVector({1.0, 2.0}), -1.0);
    CHECK(m[0] ==
          doctest::Approx(2.0 * std::exp(-1.0) - std::exp(-2.0)).epsilon(1e-14));
    CHECK(m[1] == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    const auto h = limit_pair_marginals(LambdaVector({0.5, 3.0}), -2.0);
    CHECK(h[1] == doctest::Approx(std::exp(-6.0)).epsilon(1e-14));
}

TEST_CASE("limiting pair marginals bound the joint df") {
    const LambdaVector lv({0.5, 3.0});
    for (double x1 : {-1.5, -0.5}) {
        for (double x2 : {-1.0, -0.2}) {
            const double joint = limit_pair_cdf(lv, x1, x2);
            CHECK(joint <= limit_pair_marginals(lv, x1)[0] + 1e-15);
            CHECK(joint <= limit_pair_marginals(lv, x2)[1] + 1e-15);
        }
    }
}

TEST_CASE("limiting pair moments at pinned rates") {
    const LimitPairMoments m = limit_pair_moments(LambdaVector({1.0, 2.0}));
    CHECK(m.mean_early == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(m.mean_late == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(m.var_early == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(m.var_late == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(m.covariance == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(m.correlation == doctest::Approx(0.4472135954999579).epsilon(1e-14));
    CHECK(m.expected_sq_gap == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("correlation of nearly equal rates approaches 1/sqrt(2)") {
    const LimitPairMoments m = limit_pair_moments(LambdaVector({1.0, 1.0 + 1e-9}));
    CHECK(m.correlation == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("limiting pair df composed with an extreme-value df") {
    const GevParams g0{0.0};
    const LambdaVector lv({1.0, 2.0});
    CHECK(limit_pair_cdf_general(g0, lv, 0.0, 1.0) ==
          doctest::Approx(0.373957476850552300).epsilon(1e-15));
    CHECK(limit_pair_cdf_general(g0, lv, 5.0, -5.0) ==
          doctest::Approx(std::pow(gev_cdf(0.0, -5.0), 2)).epsilon(1e-13));
    CHECK(limit_pair_cdf_general(g0, lv, kInf, 1.0) ==
          doctest::Approx(std::pow(gev_cdf(0.0, 1.0), 2)).epsilon(1e-14));
    // Below the support of a bounded-left shape the df vanishes.
    CHECK(limit_pair_cdf_general(GevParams{0.5}, lv, -3.0, 1.0) == 0.0);
}

TEST_CASE("general composition agrees between shape bundle and law object") {
    const LambdaVector lv({0.5, 3.0});
    for (double y1 : {-1.0, 0.3, 2.0}) {
        for (double y2 : {-0.5, 0.8, 2.5}) {
            CHECK(limit_pair_cdf_general(GevParams{0.0}, lv, y1, y2) ==
                  doctest::Approx(
                      limit_pair_cdf_general(UnivariateLaw::gev(0.0), lv, y1, y2))
                      .epsilon(1e-14));
        }
    }
    // Composing with the canonical law reproduces the canonical-scale df.
    for (double x1 : {-1.5, -0.4}) {
        for (double x2 : {-0.9, -0.1}) {
            CHECK(limit_pair_cdf_general(UnivariateLaw::negexp(), lv, x1, x2) ==
                  doctest::Approx(limit_pair_cdf(lv, x1, x2)).epsilon(1e-14));
        }
    }
}

TEST_CASE("conditional exceedance limit at pinned points") {
    const GevParams g0{0.0};
    const LambdaVector lv({1.0, 2.0});
    CHECK(conditional_exceedance_limit(g0, lv, 0.0, 1.0) ==
          doctest::Approx(0.263239349726857312).epsilon(1e-14));
    CHECK(conditional_exceedance_limit(g0, lv, 0.0, kInf) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(conditional_exceedance_limit(g0, lv, -kInf, 1.0) ==
          doctest::Approx(std::pow(gev_cdf(0.0, 1.0), 2)).epsilon(1e-12));
}

TEST_CASE("conditional exceedance limit validates and degenerates") {
    const GevParams g0{0.0};
    const LambdaVector lv({1.0, 2.0});
    CHECK_THROWS_AS(conditional_exceedance_limit(g0, lv, 1.0, 0.5), DomainError);
    // Conditioning above the upper support endpoint leaves zero mass.
    CHECK_THROWS_AS(conditional_exceedance_limit(GevParams{-0.5}, lv, 3.0, 4.0),
                    DegenerateConditionError);
    // Values are probabilities.
    for (double u : {-1.0, 0.0, 1.0}) {
        for (double y : {u + 0.5, u + 2.0}) {
            const double v = conditional_exceedance_limit(g0, lv, u, y);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("limiting triple df at pinned points") {
    const LambdaVector lv({1.0, 2.0, 3.0});
    CHECK(limit_triple_cdf(lv, -1.0, -0.5, 0.0) ==
          doctest::Approx(0.576556329838766765).epsilon(1e-15));
    CHECK(limit_triple_cdf(lv, 0.0, 0.0, 0.0) == doctest::Approx(1.0));
    CHECK(limit_triple_cdf(lv, -1.5, -1.0, -0.5) ==
          doctest::Approx(0.128647106211514960).epsilon(1e-15));
}

TEST_CASE("limiting triple df at integer rates equals the finite-index df") {
    const LambdaVector lv({1.0, 2.0, 3.0});
    for (double x1 : {-2.0, -1.2, -0.3}) {
        for (double x2 : {-1.7, -0.8, -0.1}) {
            for (double x3 : {-1.3, -0.6, 0.0}) {
                CHECK(limit_triple_cdf(lv, x1, x2, x3) ==
                      doctest::Approx(triple_record_cdf_negexp(1, 2, 3, x1, x2, x3))
                          .epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("limiting triple df marginalizes exactly onto the later pair") {
    const LambdaVector lv({0.8, 1.7, 3.1});
    const LambdaVector tail({1.7, 3.1});
    for (double x2 = -2.4; x2 <= 0.0; x2 += 0.4) {
        for (double x3 = -2.4; x3 <= 0.0; x3 += 0.4) {
            CHECK(limit_triple_cdf(lv, 0.0, x2, x3) ==
                  doctest::Approx(limit_pair_cdf(tail, x2, x3)).epsilon(1e-14));
        }
    }
}

TEST_CASE("a future rate bound shifts the earlier pair law in the limit") {
    const LambdaVector lv({1.0, 2.0, 3.0});
    const double gap = limit_triple_cdf(lv, -1.0, -0.5, 0.0) -
                       limit_pair_cdf(LambdaVector({1.0, 2.0}), -1.0, -0.5);
    CHECK(gap > 0.2);
}

TEST_CASE("the variant trivariate form disagrees with the supported one") {
    const LambdaVector lv({1.0, 2.0, 3.0});
    const double main_v = limit_triple_cdf(lv, -1.5, -1.0, -0.5);
    const double alt_v = limit_triple_cdf_alt(lv, -1.5, -1.0, -0.5);
    CHECK(std::abs(main_v - alt_v) > 0.05);
    // The variant breaks the marginal-consistency identity.
    double worst = 0.0;
    const LambdaVector tail({2.0, 3.0});
    for (double x2 = -2.0; x2 <= 0.0; x2 += 0.25) {
        for (double x3 = -2.0; x3 <= 0.0; x3 += 0.25) {
            worst = std::max(worst, std::abs(limit_triple_cdf_alt(lv, 0.0, x2, x3) -
                                             limit_pair_cdf(tail, x2, x3)));
        }
    }
    CHECK(worst > 1e-3);
}

TEST_CASE("limiting triple covariance matrix at pinned rates") {
    const auto c = limit_triple_cov(LambdaVector({1.0, 2.0, 3.0}));
    CHECK(c[0] == doctest::Approx(49.0 / 36.0).epsilon(1e-14)); // Var Y1
    CHECK(c[4] == doctest::Approx(13.0 / 36.0).epsilon(1e-14)); // Var Y2
    CHECK(c[8] == doctest::Approx(1.0 / 9.0).epsilon(1e-14));   // Var Y3
    CHECK(c[1] == doctest::Approx(13.0 / 36.0).epsilon(1e-14)); // Cov(Y1,Y2)
    CHECK(c[2] == doctest::Approx(1.0 / 9.0).epsilon(1e-14));   // Cov(Y1,Y3)
    CHECK(c[5] == doctest::Approx(1.0 / 9.0).epsilon(1e-14));   // Cov(Y2,Y3)
    CHECK(c[1] == c[3]);
    CHECK(c[2] == c[6]);
    CHECK(c[5] == c[7]);
}

TEST_CASE("limiting covariance matrices are positive semidefinite") {
    const std::vector<std::vector<double>> rates = {
        {0.3, 0.9, 4.0}, {1.0, 1.1, 1.2}, {0.05, 2.0, 50.0}, {2.0, 3.0, 5.0}};
    for (const auto& r : rates) {
        const auto c = limit_triple_cov(LambdaVector(r));
        // Sylvester's criterion on the leading principal minors.
        const double m1 = c[0];
        const double m2 = c[0] * c[4] - c[1] * c[3];
        const double m3 = c[0] * (c[4] * c[8] - c[5] * c[7]) -
                          c[1] * (c[3] * c[8] - c[5] * c[6]) +
                          c[2] * (c[3] * c[7] - c[4] * c[6]);
        CHECK(m1 > 0.0);
        CHECK(m2 > -1e-12);
        CHECK(m3 > -1e-12);
    }
}

TEST_CASE("chain means telescope the rate reciprocals") {
    const auto m2 = limit_chain_means(LambdaVector({1.0, 2.0}));
    CHECK(m2[0] == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(m2[1] == doctest::Approx(-0.5).epsilon(1e-15));
    const auto m3 = limit_chain_means(LambdaVector({1.0, 2.0, 3.0}));
    CHECK(m3[0] == doctest::Approx(-(1.0 + 0.5 + 1.0 / 3.0)).epsilon(1e-14));
    CHECK(m3[1] == doctest::Approx(-(0.5 + 1.0 / 3.0)).epsilon(1e-14));
    CHECK(m3[2] == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("record increment df at pinned points") {
    CHECK(limit_increments_cdf(LambdaVector({1.0, 2.0}), {1.0}) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(limit_increments_cdf(LambdaVector({1.0, 2.0, 3.0}), {1.0, 1.0}) ==
          doctest::Approx((1.0 - std::exp(-1.0)) * (1.0 - std::exp(-2.0)))
              .epsilon(1e-14));
    CHECK(limit_increments_cdf(LambdaVector({1.0, 2.0, 3.0}), {kInf, 1.0}) ==
          doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("record increment df validates its input") {
    CHECK_THROWS_AS(limit_increments_cdf(LambdaVector({1.0}), {}), DimensionError);
    CHECK_THROWS_AS(limit_increments_cdf(LambdaVector({1.0, 2.0}), {1.0, 1.0}),
                    DimensionError);
    CHECK_THROWS_AS(limit_increments_cdf(LambdaVector({1.0, 2.0}), {-1.0}), DomainError);
}

TEST_CASE("joint value/increment df at pinned points") {
    const LambdaVector lv({1.0, 2.0});
    CHECK(limit_record_increment_joint(lv, -2.0, 1.0) ==
          doctest::Approx((std::exp(1.0) - 1.0) * std::exp(-4.0)).epsilon(1e-14));
    CHECK(limit_record_increment_joint(lv, -0.5, 1.0) ==
          doctest::Approx(2.0 * std::exp(-0.5) - 2.0 * std::exp(-1.0)).epsilon(1e-14));
    CHECK(limit_record_increment_joint(lv, 0.0, 1.0) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("joint value/increment df has the right marginals") {
    const LambdaVector lv({1.0, 2.0});
    for (double x : {-2.0, -0.8, -0.1}) {
        CHECK(limit_record_increment_joint(lv, x, kInf) ==
              doctest::Approx(limit_pair_marginals(lv, x)[0]).epsilon(1e-12));
    }
    for (double y : {0.3, 1.0, 2.5}) {
        CHECK(limit_record_increment_joint(lv, 0.0, y) ==
              doctest::Approx(1.0 - std::exp(-lv[0] * y)).epsilon(1e-12));
    }
}

TEST_CASE("value and increment do not factorize") {
    const LambdaVector lv({1.0, 2.0});
    const double joint = limit_record_increment_joint(lv, -0.5, 1.0);
    const double product = limit_pair_marginals(lv, -0.5)[0] *
                           limit_record_increment_joint(lv, 0.0, 1.0);
    CHECK(std::abs(joint - product) > 0.01);
}

TEST_CASE("joint value/increment df is continuous across its branch line") {
    const LambdaVector lv({1.0, 2.0});
    for (double x : {-2.0, -1.0, -0.25}) {
        const double y = -x; // branch boundary y = -x
        const double below = limit_record_increment_joint(lv, x, y - 1e-9);
        const double above = limit_record_increment_joint(lv, x, y + 1e-9);
        CHECK(std::abs(below - above) < 1e-8);
    }
}
