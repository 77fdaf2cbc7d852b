#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "subtraj/cost_model.hpp"
#include "subtraj/full_distance.hpp"
#include "support/fixtures.hpp"
#include "support/instances.hpp"
#include "support/reference.hpp"

using namespace subtraj;
using testsupport::symbols;

TEST(WedUnit, EditExamplePairHasDistance4) {
    EXPECT_EQ(full_distance(testsupport::edit_example_query(), testsupport::edit_example_data(),
                            wed_unit()),
              4.0);
}

TEST(WedCustom, AllZeroCostsGiveZeroDistance) {
    const cost_model zero = wed_custom([](const point&, const point&) { return 0.0; },
                                       [](const point&) { return 0.0; },
                                       [](const point&) { return 0.0; });
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        const auto [q, d] = testsupport::random_pair(rng, true, 1, 6, 1, 10);
        EXPECT_EQ(full_distance(q, d, zero), 0.0);
    }
}

TEST(WedCustom, ExpensiveSubstitutionMatchesReferenceDp) {
    // sub = 2 never beats del + ins = 2 strictly, so the distance degenerates
    // to cheapest edit scripts; either route must agree with the raw DP.
    const cost_model m = wed_custom(
        [](const point& a, const point& b) { return a == b ? 0.0 : 2.0; },
        [](const point&) { return 1.0; }, [](const point&) { return 1.0; });
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 40; ++rep) {
        const auto [q, d] = testsupport::random_pair(rng, true, 1, 8, 1, 12);
        EXPECT_EQ(full_distance(q, d, m), testsupport::ref_edit_distance(q, d, m));
    }
}

TEST(Edr, IdenticalTrajectoriesAreAtDistanceZero) {
    std::mt19937_64 rng(13);
    const trajectory t = testsupport::random_planar(rng, "t", 9);
    EXPECT_EQ(full_distance(t, t, edr(0.5)), 0.0);
    EXPECT_EQ(full_distance(t, t, edr(1e-6)), 0.0);
}

TEST(Edr, SinglePointSubstitution) {
    const trajectory q = make_trajectory("q", {point::planar(0, 0)});
    const trajectory d = make_trajectory("d", {point::planar(10, 10)});
    EXPECT_EQ(full_distance(q, d, edr(0.1)), 1.0);
}

TEST(Edr, RejectsNonPositiveEpsilon) {
    EXPECT_THROW(edr(0.0), nonpositive_epsilon_error);
    EXPECT_THROW(edr(-1.0), nonpositive_epsilon_error);
}

TEST(Edr, MatchesReferenceDpAndStaysIntegral) {
    std::mt19937_64 rng(14);
    const cost_model m = edr(0.3);
    for (int rep = 0; rep < 40; ++rep) {
        const auto [q, d] = testsupport::random_pair(rng, false, 1, 8, 1, 20);
        const double got = full_distance(q, d, m);
        EXPECT_EQ(got, testsupport::ref_edit_distance(q, d, m));
        EXPECT_EQ(got, std::floor(got));
        EXPECT_GE(got, 0.0);
    }
}

TEST(Erp, SinglePointPair) {
    const trajectory q = make_trajectory("q", {point::planar(3, 4)});
    const trajectory d = make_trajectory("d", {point::planar(0, 0)});
    EXPECT_EQ(full_distance(q, d, erp(point::planar(0, 0))), 5.0);
}

TEST(Erp, IdenticalTrajectoriesAreAtDistanceZero) {
    std::mt19937_64 rng(15);
    const trajectory t = testsupport::random_planar(rng, "t", 7);
    EXPECT_EQ(full_distance(t, t, erp(point::planar(0.3, 0.7))), 0.0);
}

TEST(Erp, MatchesReferenceDp) {
    std::mt19937_64 rng(16);
    const cost_model m = erp(point::planar(0, 0));
    for (int rep = 0; rep < 40; ++rep) {
        const auto [q, d] = testsupport::random_pair(rng, false, 1, 8, 1, 16);
        EXPECT_NEAR(full_distance(q, d, m), testsupport::ref_edit_distance(q, d, m), 1e-12);
    }
}

TEST(Dtw, IdenticalTrajectoriesAreAtDistanceZero) {
    std::mt19937_64 rng(17);
    const trajectory t = testsupport::random_planar(rng, "t", 8);
    EXPECT_EQ(full_distance(t, t, dtw()), 0.0);
    EXPECT_EQ(full_distance(t, t, frechet()), 0.0);
}

TEST(Dtw, WholePairMatchesReferenceRecursion) {
    const cost_model m = dtw(equality_metric());
    const trajectory q = testsupport::warp_example2_query();
    const trajectory d = testsupport::warp_example2_data();
    EXPECT_EQ(full_distance(q, d, m), testsupport::ref_dtw_distance(q, d, m));
}

TEST(Frechet, UnitSeparationGivesBottleneckOne) {
    const trajectory q = make_trajectory("q", {point::planar(0, 0), point::planar(1, 0)});
    const trajectory d = make_trajectory("d", {point::planar(0, 1), point::planar(1, 1)});
    EXPECT_EQ(full_distance(q, d, frechet()), 1.0);
}

TEST(FullDistance, RandomPairsMatchMemoizedRecursions) {
    std::mt19937_64 rng(18);
    for (const auto& mc : testsupport::acceptance_models()) {
        for (int rep = 0; rep < 25; ++rep) {
            const auto [q, d] = testsupport::random_pair(rng, mc.symbolic, 1, 8, 1, 14);
            EXPECT_NEAR(full_distance(q, d, mc.model),
                        testsupport::ref_full_distance(q, d, mc.model), 1e-12)
                << mc.model.name;
        }
    }
}

TEST(FullDistance, SymmetricMetricsGiveSymmetricWarpAndFrechet) {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        const auto [a, b] = testsupport::random_pair(rng, false, 2, 9, 2, 9);
        EXPECT_NEAR(full_distance(a, b, dtw()), full_distance(b, a, dtw()), 1e-12);
        EXPECT_NEAR(full_distance(a, b, frechet()), full_distance(b, a, frechet()), 1e-12);
    }
}

TEST(FullDistance, EmptyRangeBoundaryIdentities) {
    std::mt19937_64 rng(20);
    const trajectory q = testsupport::random_symbolic(rng, "q", 5);
    const trajectory d = testsupport::random_symbolic(rng, "d", 7);
    const cost_model m = wed_unit();
    const subtraj_range whole_q{1, q.size()}, whole_d{1, d.size()};
    const subtraj_range none = subtraj_range::empty_range();

    // dist(q, empty) = sum of deletions, dist(empty, d) = sum of insertions.
    EXPECT_EQ(full_distance(q, whole_q, d, none, m), 5.0);
    EXPECT_EQ(full_distance(q, none, d, whole_d, m), 7.0);
    EXPECT_EQ(full_distance(q, none, d, none, m), 0.0);

    EXPECT_EQ(full_distance(q, none, d, none, dtw(equality_metric())), 0.0);
    EXPECT_TRUE(std::isinf(full_distance(q, whole_q, d, none, dtw(equality_metric()))));
}

TEST(ParseModel, RoundTripsTheCliSurface) {
    EXPECT_EQ(parse_model("dtw").family, cost_family::warp);
    EXPECT_EQ(parse_model("frechet").family, cost_family::frechet);
    EXPECT_EQ(parse_model("wed:unit").family, cost_family::edit);
    const cost_model e = parse_model("edr:eps=0.25");
    EXPECT_EQ(e.family, cost_family::edit);
    EXPECT_EQ(e.sub(point::planar(0, 0), point::planar(0.2, 0)), 0.0);
    EXPECT_EQ(e.sub(point::planar(0, 0), point::planar(0.3, 0)), 1.0);
    const cost_model r = parse_model("erp:cx=1,cy=2");
    EXPECT_EQ(r.del(point::planar(1, 2)), 0.0);
    // Bare "edr" falls back to the documented default epsilon.
    EXPECT_EQ(parse_model("edr").sub(point::planar(0, 0), point::planar(0.0005, 0)), 0.0);
    EXPECT_THROW(parse_model("nope"), error);
    EXPECT_THROW(parse_model("edr:eps=x"), error);
    EXPECT_THROW(parse_model("erp:cx=1"), error);
}
