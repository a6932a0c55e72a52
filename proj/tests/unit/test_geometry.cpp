#include <gtest/gtest.h>

#include "osclab/claims.hpp"
#include "osclab/random.hpp"

using namespace osclab;

namespace {

double brute_diameter(const ConvexDomain& k) {
    double d = 0;
    for (auto a : k.vertices())
        for (auto b : k.vertices()) d = std::max(d, std::abs(a - b));
    return d;
}

// Width as the minimum over a fine direction sweep of the projection extent, refined locally.
double sweep_width(const ConvexDomain& k) {
    auto extent = [&](double t) {
        cplx u = unit(t);
        double lo = 1e300, hi = -1e300;
        for (auto v : k.vertices()) {
            lo = std::min(lo, dot(v, u));
            hi = std::max(hi, dot(v, u));
        }
        return hi - lo;
    };
    double best = 1e300, arg = 0;
    for (int i = 0; i < 20000; ++i) {
        double t = pi * i / 20000;
        if (extent(t) < best) best = extent(t), arg = t;
    }
    double a = arg - pi / 20000, b = arg + pi / 20000;
    for (int it = 0; it < 100; ++it) {
        double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
        (extent(m1) < extent(m2) ? b : a) = (extent(m1) < extent(m2) ? m2 : m1);
    }
    return std::min(best, extent(0.5 * (a + b)));
}

// Chord length by marching along the ray in small steps and bisecting the exit.
double ray_chord(const ConvexDomain& k, cplx z, double phi) {
    cplx u = unit(phi);
    double step = k.diameter() / 4000, t = step;
    if (!k.contains(z + 1e-9 * u)) return 0.0;
    while (k.contains(z + t * u)) t += step;
    double a = t - step, b = t;
    for (int it = 0; it < 60; ++it) {
        double m = 0.5 * (a + b);
        (k.contains(z + m * u) ? a : b) = m;
    }
    return a;
}

}  // namespace

TEST(Geometry, UnitSquareValues) {
    auto k = ConvexDomain::rectangle(1, 1);
    EXPECT_NEAR(k.diameter(), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(k.width(), 1.0, 1e-12);
    EXPECT_NEAR(k.perimeter(), 4.0, 1e-12);
    EXPECT_NEAR(depth(k), 1.0, 1e-6);
    for (double s : k.vertex_s()) EXPECT_NEAR(k.boundary_point(s).omega, pi / 2, 1e-12);
    EXPECT_NEAR(k.boundary_point(0.5).omega, 0.0, 1e-12);
}

TEST(Geometry, DiskValues) {
    auto k = ConvexDomain::disk({1, -2}, 0.75);
    EXPECT_DOUBLE_EQ(k.diameter(), 1.5);
    EXPECT_DOUBLE_EQ(k.width(), 1.5);
    EXPECT_NEAR(k.perimeter(), 1.5 * pi, 1e-12);
    EXPECT_NEAR(depth(k), 1.5, 1e-9);
    EXPECT_EQ(k.boundary_point(0.3).omega, 0.0);
}

TEST(Geometry, RegularTriangleWidthIsAltitude) {
    auto k = ConvexDomain::regular_polygon(3, 1.0);
    EXPECT_NEAR(k.diameter(), std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(k.width(), 1.5, 1e-12);
}

TEST(Geometry, RejectsInvalidPolygons) {
    EXPECT_THROW(ConvexDomain::polygon({{0, 0}, {1, 0}}), InvalidDomain);
    EXPECT_THROW(ConvexDomain::polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), InvalidDomain);
    EXPECT_THROW(ConvexDomain::polygon({{0, 0}, {2, 0}, {0.5, 0.5}, {0, 2}}), InvalidDomain);
    EXPECT_THROW(ConvexDomain::polygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), InvalidDomain);
    EXPECT_THROW(ConvexDomain::disk(0.0, 0.0), InvalidDomain);
    try {
        ConvexDomain::polygon({{0, 0}, {2, 0}, {0.5, 0.5}, {0, 2}});
    } catch (const InvalidDomain& e) {
        EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos);
    }
}

TEST(Geometry, DiameterAndWidthMatchOracles) {
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng = trial_rng(11, i);
        auto k = random_polygon(rng);
        EXPECT_NEAR(k.diameter(), brute_diameter(k), 1e-12 * k.diameter());
        EXPECT_NEAR(k.width(), sweep_width(k), 1e-9 * k.diameter());
        EXPECT_LE(k.width(), k.diameter());
    }
}

TEST(Geometry, ChordMatchesRaySampling) {
    for (std::uint64_t i = 0; i < 30; ++i) {
        Rng rng = trial_rng(12, i);
        auto k = random_polygon(rng);
        auto b = k.boundary_point(random_boundary_s(k, rng));
        double sigma = 0.5 * (b.sigma_min() + b.sigma_max());
        double phi = sigma + uniform(rng, -1.2, 1.2);
        auto c = chord(k, b, phi);
        EXPECT_NEAR(c.delta, ray_chord(k, b.z, phi), 1e-6 * k.diameter());
    }
}

TEST(Geometry, ArcParametrizationRoundTrip) {
    Rng rng = trial_rng(13, 0);
    auto k = random_polygon(rng);
    for (int i = 0; i < 200; ++i) {
        double s = uniform(rng, 0, k.perimeter());
        EXPECT_NEAR(k.arc_param(k.point_at(s)), s, 1e-9 * k.perimeter());
    }
    EXPECT_NEAR(arc_between(k, 0.2, 0.1), k.perimeter() - 0.1, 1e-12);
}

TEST(Geometry, SupplementaryAnglesSumToTwoPi) {
    Rng rng = trial_rng(14, 0);
    auto k = random_polygon(rng);
    double omega_sum = 0;
    for (double s : k.vertex_s()) omega_sum += k.boundary_point(s).omega;
    EXPECT_NEAR(omega_sum, two_pi, 1e-9);
}

TEST(GeometryProperties, ScalingAndTranslation) {
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = trial_rng(15, i);
        auto k = random_polygon(rng);
        double lam = std::exp(uniform(rng, -2, 2));
        cplx shift(uniform(rng, -5, 5), uniform(rng, -5, 5));
        std::vector<cplx> v;
        for (auto z : k.vertices()) v.push_back(lam * z + shift);
        auto kk = ConvexDomain::polygon(v);
        EXPECT_NEAR(kk.diameter(), lam * k.diameter(), 1e-10 * kk.diameter());
        EXPECT_NEAR(kk.width(), lam * k.width(), 1e-10 * kk.diameter());
        EXPECT_NEAR(kk.perimeter(), lam * k.perimeter(), 1e-10 * kk.perimeter());
        EXPECT_NEAR(depth(kk), lam * depth(k), 1e-6 * kk.diameter());
    }
}

TEST(GeometryProperties, DepthAtMostWidth) {
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = trial_rng(16, i);
        auto k = random_polygon(rng);
        double h = depth(k);
        EXPECT_GE(h, 0.0);
        EXPECT_LE(h, k.width() + 1e-9);
    }
}

TEST(Geometry, DepthVanishesAtAcuteCorners) {
    EXPECT_EQ(depth(ConvexDomain::regular_polygon(3)), 0.0);
    EXPECT_EQ(depth(ConvexDomain::polygon({{0, 0}, {4, 0}, {1, 1}})), 0.0);
    auto hex = ConvexDomain::regular_polygon(6);
    EXPECT_GT(depth(hex), 0.0);
}

TEST(Claims, TransfiniteEstimateInsideBracket) {
    auto disk = ConvexDomain::disk(0.0, 1.0);
    auto est = transfinite_diameter_estimate(disk, 32);
    // Equally spaced points are Fekete points of the circle: mean distance m^{1/(m-1)}.
    EXPECT_NEAR(est.fekete, std::pow(32.0, 1.0 / 31), 1e-6);
    auto sq = ConvexDomain::rectangle(1, 1);
    auto e2 = transfinite_diameter_estimate(sq, 32);
    EXPECT_GE(e2.fekete, e2.lower);
    EXPECT_LE(e2.fekete, transfinite_diameter_estimate(sq, 16).fekete);
}

TEST(Claims, TriangleContainmentOnRandomPairs) {
    int applicable = 0;
    for (std::uint64_t i = 0; i < 40; ++i) {
        Rng rng = trial_rng(17, i);
        auto k = random_polygon(rng);
        double a = random_boundary_s(k, rng), b = k.wrap(a + uniform(rng, 0.01, 0.3) * k.perimeter());
        auto pa = k.boundary_point(a), pb = k.boundary_point(b);
        // forward tangent at zeta, backward tangent at zeta'
        auto r = triangle_containment_check(k, pa.z, pb.z, pa.alpha_plus, pb.alpha_minus + pi, rng, 500);
        if (r.applicable) {
            ++applicable;
            EXPECT_EQ(r.violations, 0);
        }
    }
    EXPECT_GE(applicable, 20);
}

TEST(Claims, AngleDiamArcBoundsOnRandomPairs) {
    int applicable = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = trial_rng(18, i);
        auto k = random_polygon(rng);
        double a = random_boundary_s(k, rng);
        double b = k.wrap(a + uniform(rng, 0.0, 0.5) * k.width());
        auto r = angle_diam_arc_bounds(k, a, b);
        if (!r.applicable) continue;
        ++applicable;
        EXPECT_TRUE(r.bounds_ok) << "trial " << i;
    }
    EXPECT_GT(applicable, 50);
}
