#include <gtest/gtest.h>

#include "osclab/batch.hpp"

using namespace osclab;

namespace {

BatchSummary run(const std::string& id, int trials, std::vector<double> q = {2.0}, std::uint64_t seed = 7) {
    BatchParams bp;
    bp.trials = trials;
    bp.seed = seed;
    bp.q = std::move(q);
    return summarize(run_audit_batch(id, bp));
}

}  // namespace

TEST(Report, MarginSignsAndTolerance) {
    auto r = make_report("x", 2.0, 1.0);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_DOUBLE_EQ(r.margin, 1.0);
    EXPECT_EQ(make_report("x", 1.0, 2.0).verdict, Verdict::fail);
    EXPECT_EQ(make_report("x", 1.0, 1.0 + 1e-12).verdict, Verdict::pass);
    auto na = not_applicable("x", "why");
    EXPECT_FALSE(na.applicable);
    EXPECT_EQ(na.verdict, Verdict::not_applicable);
}

TEST(Audits, ChebyshevFloorValues) {
    EXPECT_DOUBLE_EQ(chebyshev_floor(4.0, 3), 2.0);
    EXPECT_DOUBLE_EQ(chebyshev_floor(2.0, 1), 1.0);
    EXPECT_THROW(chebyshev_floor(1.0, 0), InvalidInput);
}

TEST(Audits, ChebyshevWitnessAttainsFloor) {
    for (double J : {1.0, 2.0, 4.0})
        for (int k = 1; k <= 6; ++k) {
            auto roots = chebyshev_witness_roots(0.0, J, k);
            EXPECT_NEAR(segment_sup(roots, 0.0, J), chebyshev_floor(J, k), 1e-9 * chebyshev_floor(J, k));
        }
}

TEST(Audits, TuranPointwiseOnDisk) {
    auto disk = ConvexDomain::disk({0.3, -0.1}, 1.7);
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng = trial_rng(41, i);
        auto p = random_polynomial_in(disk, 1 + static_cast<int>(i % 30), rng);
        for (int j = 0; j < 20; ++j) EXPECT_FALSE(turan_pointwise_audit(p, disk, uniform(rng, 0, disk.perimeter())).failed());
    }
}

TEST(Audits, DepthTheoremNotApplicableOnTriangle) {
    auto tri = ConvexDomain::regular_polygon(3);
    auto r = depth_theorem_audit(RootPolynomial::power(3), tri, 2.0);
    EXPECT_EQ(r.verdict, Verdict::not_applicable);
}

TEST(Audits, ClassifyZerosIsAPartition) {
    for (std::uint64_t i = 0; i < 30; ++i) {
        Rng rng = trial_rng(42, i);
        auto k = random_polygon(rng);
        auto p = random_polynomial_in(k, 5 + static_cast<int>(i), rng);
        auto zeta = k.boundary_point(random_boundary_s_with_vertices(k, rng));
        for (double sigma : normal_fan(zeta, 4))
            for (int sign : {-1, 1}) {
                ZeroPartition z;
                try {
                    z = classify_zeros(p, k, zeta, sigma, sign);
                } catch (const Error&) {
                    continue;
                }
                std::vector<int> seen(p.degree(), 0);
                for (auto& c : z.classes)
                    for (int j : c) ++seen[j];
                for (int c : seen) EXPECT_EQ(c, 1);
            }
    }
}

TEST(AuditBatches, EveryIdPassesSmallBatch) {
    for (auto& id : audit_ids()) {
        if (id == "hgap") continue;
        auto s = run(id, 20, {1.0, 2.0});
        EXPECT_EQ(s.fail, 0) << id << " worst " << s.worst_margin;
        EXPECT_EQ(s.total() > 0, true) << id;
    }
}

TEST(AuditBatches, HGapWithQuadraticExponent) {
    auto s = run("hgap", 40, {2.0});
    EXPECT_EQ(s.fail, 0);
}

TEST(AuditBatches, TiltedOnDiskAllPass) {
    BatchParams bp;
    bp.domain = ConvexDomain::disk(0.0, 1.0);
    bp.trials = 30;
    auto s = summarize(run_audit_batch("tilted", bp));
    EXPECT_EQ(s.fail, 0);
    EXPECT_EQ(s.pass + s.not_applicable, s.total());
}

TEST(AuditBatches, ResultsIndependentOfThreadCount) {
    BatchParams bp;
    bp.trials = 12;
    bp.q = {1.0, 2.0};
    setenv("OSC_LAB_THREADS", "1", 1);
    auto a = run_audit_batch("nikolskii", bp);
    setenv("OSC_LAB_THREADS", "3", 1);
    auto b = run_audit_batch("nikolskii", bp);
    unsetenv("OSC_LAB_THREADS");
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].reports[0].lhs, b[i].reports[0].lhs);
}

TEST(AuditBatches, UnknownIdRejected) {
    BatchParams bp;
    EXPECT_THROW(run_audit_batch("nope", bp), InvalidInput);
}
