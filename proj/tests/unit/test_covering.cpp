#include <gtest/gtest.h>

#include "osclab/covering.hpp"
#include "osclab/random.hpp"

using namespace osclab;

TEST(Covering, DiskHasNoComponents) {
    auto disk = ConvexDomain::disk(0.0, 1.0);
    auto cov = build_covering(disk, 0.01);
    EXPECT_EQ(cov.k0(), 0u);
    EXPECT_EQ(cov.measure, 0.0);
    EXPECT_TRUE(cov.invariants_hold());
}

TEST(Covering, SquareInvariants) {
    auto sq = ConvexDomain::rectangle(1, 1);
    const double d = sq.diameter(), w = sq.width();
    for (double r : {0.001, 0.005}) {
        auto cov = build_covering(sq, r);
        EXPECT_GE(cov.k0(), 1u);
        EXPECT_LE(cov.k0(), 4u);
        EXPECT_LE(cov.measure, 48 * r * d / w * (1 + 1e-9));
        for (auto& c : cov.components) {
            EXPECT_GT(c.arc.length, 8 * r * d / w);
            EXPECT_LE(c.arc.length, 24 * r * d / w * (1 + 1e-9));
        }
        EXPECT_EQ(cov.verification_exceptions, 0);
        EXPECT_TRUE(cov.invariants_hold());
        EXPECT_TRUE(cov.r_gate);
    }
}

TEST(Covering, NonGoodPointsAreCovered) {
    auto sq = ConvexDomain::rectangle(2, 1);
    double r = 0.002;
    auto cov = build_covering(sq, r);
    double theta = covering_theta(sq);
    Rng rng = trial_rng(51, 0);
    for (int i = 0; i < 2000; ++i) {
        double s = uniform(rng, 0, sq.perimeter());
        if (!good_point_test(sq, s, r, theta)) {
            EXPECT_TRUE(cov.contains(sq, s)) << s;
        }
    }
    for (double v : sq.vertex_s())
        if (!good_point_test(sq, v, r, theta)) {
            EXPECT_TRUE(cov.contains(sq, v));
        }
}

TEST(Covering, LargeRadiusHasNoCutPoint) {
    auto pent = ConvexDomain::regular_polygon(5);
    EXPECT_THROW(build_covering(pent, 0.8 * pent.diameter()), NoCutPoint);
}

TEST(Covering, DisjointFamilyIsMaximal) {
    auto sq = ConvexDomain::rectangle(1, 1);
    double r = 0.003;
    auto elem = elementary_arcs(sq, r, covering_theta(sq));
    ASSERT_FALSE(elem.arcs.empty());
    auto fam = maximal_disjoint_family(sq, elem.arcs);
    EXPECT_TRUE(is_maximal(sq, elem.arcs, fam));
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) EXPECT_TRUE(arcs_disjoint(sq, fam[i], fam[j]));
}

TEST(Covering, ScheduleAndGates) {
    auto sq = ConvexDomain::rectangle(1, 1);
    EXPECT_NEAR(r_schedule(100, sq), 300 * 2.0 * std::log(100.0) / 100, 1e-12);
    EXPECT_DOUBLE_EQ(r_gate_r1(sq), 1e-4 / std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(n_gate_n0(sq), 1e20);
    EXPECT_DOUBLE_EQ(n_gate_n1(sq), 73.0);
    double n = smallest_n_below_r1(sq);
    EXPECT_LE(r_schedule(static_cast<int>(n), sq), r_gate_r1(sq));
    EXPECT_GT(r_schedule(static_cast<int>(n) - 1, sq), r_gate_r1(sq));
    EXPECT_THROW(r_schedule(1, sq), InvalidInput);
}

TEST(CaseSplit, ExactlyOneCaseAndGatedChecksPass) {
    auto sq = ConvexDomain::rectangle(1, 1);
    auto cov = build_covering(sq, 0.004);
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = trial_rng(52, i);
        auto p = random_polynomial_in(sq, 2 + static_cast<int>(i % 15), rng);
        auto cs = case_split(p, sq, i % 2 ? 1.0 : 2.0, cov);
        EXPECT_TRUE(cs.kind == CaseKind::I || cs.kind == CaseKind::II_1 || cs.kind == CaseKind::II_2);
        for (auto& c : cs.checks) EXPECT_FALSE(c.failed()) << c.audit_id << " trial " << i;
    }
}
