#include <gtest/gtest.h>

#include "osclab/norms.hpp"
#include "osclab/random.hpp"

using namespace osclab;

namespace {

// Composite Simpson on every edge with a fixed fine mesh.
double simpson_lq(const RootPolynomial& p, const ConvexDomain& k, double q, bool derivative, int per_piece = 20000) {
    double sum = 0;
    for (auto [a, b] : detail::smooth_pieces(k)) {
        double h = (b - a) / per_piece;
        auto f = [&](double s) {
            cplx z = k.point_at(s);
            return std::exp(q * (derivative ? log_abs_derivative(p, z) : log_abs(p, z)));
        };
        double acc = f(a) + f(b);
        for (int i = 1; i < per_piece; ++i) acc += (i % 2 ? 4 : 2) * f(a + i * h);
        sum += acc * h / 3;
    }
    return std::pow(sum, 1 / q);
}

double mesh_sup(const RootPolynomial& p, const ConvexDomain& k, int mesh) {
    double m = 0;
    for (int i = 0; i < mesh; ++i) m = std::max(m, std::abs(evaluate(p, k.point_at(k.perimeter() * i / mesh))));
    for (double v : k.vertex_s()) m = std::max(m, std::abs(evaluate(p, k.point_at(v))));
    return m;
}

}  // namespace

TEST(Norms, ClosedFormOnSquare) {
    auto k = ConvexDomain::rectangle(1, 1);
    RootPolynomial p = RootPolynomial::power(2);
    EXPECT_NEAR(lq_norm(p, k, 1.0), 10.0 / 3, 1e-10);
    EXPECT_NEAR(lq_norm(p, k, q_inf), 2.0, 1e-12);
}

TEST(Norms, DiskPowerIsExactlyN) {
    auto disk = ConvexDomain::disk(0.0, 1.0);
    for (int n = 1; n <= 20; ++n)
        for (double q : {1.0, 2.0, q_inf}) EXPECT_NEAR(inverse_markov_factor(RootPolynomial::power(n), disk, q), n, 1e-6 * n);
}

TEST(Norms, QuadratureMatchesSimpsonOracle) {
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = trial_rng(31, i);
        auto k = random_polygon(rng);
        int n = 1 + static_cast<int>(i);
        auto p = random_polynomial_in(k, n, rng);
        for (double q : {1.0, 2.0, 3.5}) {
            double ref = simpson_lq(p, k, q, false);
            EXPECT_NEAR(lq_norm(p, k, q), ref, 1e-6 * ref) << "trial " << i << " q " << q;
            double dref = simpson_lq(p, k, q, true);
            EXPECT_NEAR(std::exp(log_lq_norm_derivative(p, k, q, default_grid(k, n))), dref, 1e-6 * dref);
        }
    }
}

TEST(Norms, SupNormMatchesDenseMeshOracle) {
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = trial_rng(32, i);
        auto k = random_polygon(rng);
        auto p = random_polynomial_in(k, 1 + static_cast<int>(i), rng);
        double ref = mesh_sup(p, k, 400000);
        double got = sup_norm(p, k).value;
        EXPECT_GE(got, ref * (1 - 1e-12));
        EXPECT_LE(got, ref * (1 + 1e-6));
    }
}

TEST(NormsProperties, NormalizedNormsIncreaseWithQ) {
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = trial_rng(33, i);
        auto k = random_polygon(rng);
        auto p = random_polynomial_in(k, 1 + static_cast<int>(i % 12), rng);
        double prev = 0;
        for (double q : {1.0, 1.5, 2.0, 4.0, 8.0, q_inf}) {
            double v = lq_norm(p, k, q) / (is_infinite_q(q) ? 1.0 : std::pow(k.perimeter(), 1 / q));
            EXPECT_GE(v, prev * (1 - 1e-8));
            prev = v;
        }
    }
}

TEST(NormsProperties, FactorScalesInverselyWithDomain) {
    for (std::uint64_t i = 0; i < 10; ++i) {
        Rng rng = trial_rng(34, i);
        auto k = random_polygon(rng);
        int n = 2 + static_cast<int>(i);
        auto roots = random_roots_in(k, n, rng);
        double lam = std::exp(uniform(rng, -1, 1));
        cplx shift(uniform(rng, -3, 3), uniform(rng, -3, 3));
        std::vector<cplx> v, r2;
        for (auto z : k.vertices()) v.push_back(lam * z + shift);
        for (auto z : roots) r2.push_back(lam * z + shift);
        auto kk = ConvexDomain::polygon(v);
        for (double q : {1.0, 2.0, q_inf}) {
            double M = inverse_markov_factor(RootPolynomial(roots), k, q);
            double M2 = inverse_markov_factor(RootPolynomial(r2, random_lead(rng)), kk, q);
            EXPECT_NEAR(M2, M / lam, 1e-6 * M / lam);
        }
    }
}

TEST(NormsProperties, LeadDoesNotChangeFactor) {
    auto k = ConvexDomain::rectangle(3, 1);
    Rng rng = trial_rng(35, 0);
    auto roots = random_roots_in(k, 7, rng);
    double M = inverse_markov_factor(RootPolynomial(roots), k, 2.0);
    EXPECT_NEAR(inverse_markov_factor(RootPolynomial(roots, cplx(1e30, -1e30)), k, 2.0), M, 1e-9 * M);
}

TEST(NormsProperties, ConstantHasZeroFactor) {
    auto k = ConvexDomain::rectangle(1, 1);
    EXPECT_EQ(inverse_markov_factor(RootPolynomial({}, 3.0), k, 2.0), 0.0);
}

TEST(Norms, InvalidExponentRejected) {
    auto k = ConvexDomain::rectangle(1, 1);
    EXPECT_THROW(lq_norm(RootPolynomial::power(2), k, 0.5), InvalidInput);
}
