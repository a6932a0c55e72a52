#include <gtest/gtest.h>

#include "osclab/search.hpp"

using namespace osclab;

TEST(Search, BudgetBelowTenNRejected) {
    SearchConfig cfg;
    cfg.n = 4;
    cfg.budget = 39;
    EXPECT_THROW(minimize_oscillation(ConvexDomain::rectangle(1, 1), cfg), BudgetTooSmall);
}

TEST(Search, DiskStaysWithinTuranAndPowerBounds) {
    auto disk = ConvexDomain::disk(0.0, 1.0);
    SearchConfig cfg;
    cfg.n = 5;
    cfg.budget = 2000;
    auto res = minimize_oscillation(disk, cfg);
    EXPECT_LE(res.best_M, 5.0 + 1e-6);
    EXPECT_GE(res.best_M, 2.5);
    EXPECT_TRUE(res.best_p.roots_in(disk));
}

TEST(Search, TraceIsMonotoneAndWithinBudget) {
    auto sq = ConvexDomain::rectangle(1, 1);
    SearchConfig cfg;
    cfg.n = 4;
    cfg.budget = 1200;
    cfg.init = InitStrategy::boundary_uniform;
    auto res = minimize_oscillation(sq, cfg);
    EXPECT_LE(res.evaluations, cfg.budget);
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
        EXPECT_LT(res.trace[i].second, res.trace[i - 1].second);
        EXPECT_GT(res.trace[i].first, res.trace[i - 1].first);
    }
    EXPECT_DOUBLE_EQ(res.trace.back().second, res.best_M);
    EXPECT_NEAR(inverse_markov_factor(res.best_p, sq, 2.0), res.best_M, 1e-9 * res.best_M);
}

TEST(Search, DeterministicUnderSeedAndThreads) {
    auto sq = ConvexDomain::rectangle(3, 1);
    SearchConfig cfg;
    cfg.n = 3;
    cfg.budget = 800;
    cfg.seed = 99;
    setenv("OSC_LAB_THREADS", "1", 1);
    auto a = minimize_oscillation(sq, cfg);
    setenv("OSC_LAB_THREADS", "4", 1);
    auto b = minimize_oscillation(sq, cfg);
    unsetenv("OSC_LAB_THREADS");
    EXPECT_EQ(a.best_M, b.best_M);
    EXPECT_EQ(a.trace, b.trace);
}

TEST(Search, ReferenceFamiliesHaveDegreeN) {
    auto sq = ConvexDomain::rectangle(1, 1);
    for (auto& [name, p] : reference_families(sq, 6)) {
        EXPECT_EQ(p.degree(), 6) << name;
        EXPECT_TRUE(p.roots_in(sq)) << name;
    }
}

TEST(Search, UserInitNeedsNRoots) {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.budget = 300;
    cfg.init = InitStrategy::user;
    cfg.user_roots = {0.5};
    EXPECT_THROW(minimize_oscillation(ConvexDomain::rectangle(1, 1), cfg), InvalidInput);
}

TEST(Search, InitNamesRoundTrip) {
    for (auto s : {InitStrategy::boundary_uniform, InitStrategy::interior_uniform, InitStrategy::corner_clustered,
                   InitStrategy::center, InitStrategy::user})
        EXPECT_EQ(parse_init(to_string(s)), s);
    EXPECT_THROW(parse_init("random"), InvalidInput);
}
