#include <gtest/gtest.h>

#include <random>

#include "subtraj/baselines.hpp"
#include "subtraj/cma.hpp"
#include "support/fixtures.hpp"
#include "support/instances.hpp"

using namespace subtraj;
using testsupport::symbols;

TEST(ExactS, EditExamplePairAgreesWithCma) {
    const trajectory q = testsupport::edit_example_query();
    const trajectory d = testsupport::edit_example_data();
    const search_result a = exact_s(q, d, wed_unit());
    const search_result b = cma_search(q, d, wed_unit());
    EXPECT_EQ(a.distance, b.distance);
    EXPECT_LE(a.distance, 4.0);  // at most the whole-pair distance
}

TEST(ExactS, SingleQueryPointFindsNearestDataPoint) {
    // Reference point far away, so insertions and deletions cost plenty and
    // the best answer is a single substituted point.
    const trajectory q = make_trajectory("q", {point::planar(0.5, 0.5)});
    std::vector<point> pts{point::planar(0, 0), point::planar(0.4, 0.5), point::planar(2, 2)};
    const trajectory d = make_trajectory("d", std::move(pts));
    const search_result r = exact_s(q, d, erp(point::planar(9, 9)));
    EXPECT_EQ(r.range, (subtraj_range{2, 2}));
    EXPECT_NEAR(r.distance, 0.1, 1e-12);
}

TEST(ExactS, MatchesCmaOnRandomInstances) {
    std::mt19937_64 rng(41);
    for (const auto& mc : testsupport::acceptance_models()) {
        for (int rep = 0; rep < 40; ++rep) {
            const auto [q, d] = testsupport::random_pair(rng, mc.symbolic, 1, 9, 1, 25);
            const double a = exact_s(q, d, mc.model).distance;
            const double b = cma_search(q, d, mc.model).distance;
            EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, b)) << mc.model.name << " rep " << rep;
        }
    }
}

TEST(Spring, WarpExample2OptimumIsTwo) {
    const trajectory q = testsupport::warp_example2_query();
    const trajectory d = testsupport::warp_example2_data();
    const search_result r = spring(q, d, equality_metric());
    EXPECT_EQ(r.distance, 2.0);
    EXPECT_EQ(cma_search(q, d, dtw(equality_metric())).distance, 2.0);
}

TEST(Spring, IdenticalPairGivesZeroOverFullRange) {
    std::mt19937_64 rng(42);
    const trajectory t = testsupport::random_planar(rng, "t", 8);
    const search_result r = spring(t, t, euclidean_metric());
    EXPECT_EQ(r.distance, 0.0);
    EXPECT_EQ(r.range, (subtraj_range{1, t.size()}));
}

TEST(Spring, MatchesCmaOnRandomInstances) {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 60; ++rep) {
        const auto [q, d] = testsupport::random_pair(rng, false, 1, 9, 1, 25);
        const double a = spring(q, d, euclidean_metric()).distance;
        const double b = cma_search(q, d, dtw()).distance;
        EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, b)) << "rep " << rep;
    }
}

TEST(GreedyBacktracking, IdenticalPairIsFree) {
    std::mt19937_64 rng(44);
    const trajectory t = testsupport::random_planar(rng, "t", 7);
    EXPECT_EQ(greedy_backtracking(t, t, euclidean_metric()).distance, 0.0);
}

TEST(GreedyBacktracking, BottleneckOneFixture) {
    const trajectory q = make_trajectory("q", {point::planar(0, 0), point::planar(1, 0)});
    const trajectory d =
        make_trajectory("d", {point::planar(0, 2), point::planar(0, 1), point::planar(1, 1),
                              point::planar(5, 5)});
    const search_result r = greedy_backtracking(q, d, euclidean_metric());
    EXPECT_EQ(r.distance, 1.0);
    EXPECT_EQ(r.range, (subtraj_range{2, 3}));
}

TEST(GreedyBacktracking, MatchesCmaOnRandomInstances) {
    std::mt19937_64 rng(45);
    for (int rep = 0; rep < 60; ++rep) {
        const auto [q, d] = testsupport::random_pair(rng, false, 1, 9, 1, 25);
        const double a = greedy_backtracking(q, d, euclidean_metric()).distance;
        const double b = cma_search(q, d, frechet()).distance;
        EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, b)) << "rep " << rep;
    }
}
