#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>

#include "audits.hpp"
#include "random.hpp"

namespace osclab {

/// Worker count: OSC_LAB_THREADS if set, else the hardware concurrency.
inline int thread_count() {
    if (const char* env = std::getenv("OSC_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, count); results must be written to per-index slots.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    int threads = static_cast<int>(std::min<std::size_t>(thread_count(), count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    pool.clear();
    if (error) std::rethrow_exception(error);
}

inline const std::vector<std::string>& audit_ids() {
    static const std::vector<std::string> ids{"nikolskii", "hset",     "hgap",     "chebyshev", "transfinite", "concentration",
                                              "tilted",    "zclass",   "twopoint", "infnorm",   "depth"};
    return ids;
}

struct BatchParams {
    std::optional<ConvexDomain> domain;  ///< fixed domain; a random polygon per trial otherwise
    int trials = 100;
    std::uint64_t seed = 1;
    int n = 0;                       ///< degree; 0 draws from [1, max_degree]
    int max_degree = 50;
    std::vector<double> q{2.0};      ///< trial i uses q[i % size]
    int fan = 8;                     ///< supporting directions per vertex
    int chebyshev_candidates = 1000;
    bool cluster_near_corner = false;  ///< two-point trials: put more than n/2 roots near T
};

struct TrialResult {
    std::size_t trial = 0;
    std::vector<AuditReport> reports;
};

struct BatchSummary {
    int pass = 0, fail = 0, not_applicable = 0, excluded = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::string worst_id;
    int total() const { return pass + fail + not_applicable + excluded; }
};

inline BatchSummary summarize(const std::vector<TrialResult>& results) {
    BatchSummary s;
    for (auto& t : results)
        for (auto& r : t.reports) {
            switch (r.verdict) {
                case Verdict::pass: ++s.pass; break;
                case Verdict::fail: ++s.fail; break;
                case Verdict::not_applicable: ++s.not_applicable; break;
                case Verdict::excluded: ++s.excluded; break;
            }
            if (r.applicable && r.margin < s.worst_margin) {
                s.worst_margin = r.margin;
                s.worst_id = r.audit_id;
            }
        }
    return s;
}

namespace detail {

inline int trial_degree(const BatchParams& bp, Rng& rng) {
    if (bp.n > 0) return bp.n;
    return std::uniform_int_distribution<int>(1, bp.max_degree)(rng);
}

/// Inner normal directions at a boundary point: the whole fan at vertices.
inline std::vector<double> fan_of(const BoundaryPoint& b, int fan) { return normal_fan(b, fan); }

inline ConvexDomain depth_domain(Rng& rng) {
    double scale = std::exp(uniform(rng, -1.0, 1.0));
    cplx c(uniform(rng, -1, 1), uniform(rng, -1, 1));
    if (uniform(rng) < 0.5) return ConvexDomain::regular_polygon(4, scale, c, uniform(rng, 0, two_pi));
    return ConvexDomain::regular_polygon(6, scale, c, uniform(rng, 0, two_pi));
}

inline std::vector<AuditReport> run_trial(const std::string& id, const BatchParams& bp, std::size_t index) {
    Rng rng = trial_rng(bp.seed, index);
    const double q = bp.q[index % bp.q.size()];
    auto domain = [&] { return bp.domain ? *bp.domain : random_polygon(rng); };

    if (id == "chebyshev") {
        static constexpr double lengths[] = {1.0, 2.0, 4.0};
        double J = lengths[index % 3];
        int k = bp.n > 0 ? bp.n : 1 + static_cast<int>((index / 3) % 6);
        return {chebyshev_audit(J, k, bp.chebyshev_candidates, rng)};
    }
    if (id == "depth") {
        ConvexDomain k = bp.domain ? *bp.domain : depth_domain(rng);
        int n = trial_degree(bp, rng);
        return {depth_theorem_audit(random_polynomial_in(k, n, rng), k, q)};
    }
    ConvexDomain k = domain();
    int n = trial_degree(bp, rng);
    if (id == "nikolskii") return {nikolskii_audit(RootPolynomial(random_roots_unrestricted(k, n, rng), random_lead(rng)), k, q)};
    if (id == "hset") {
        bool inside = uniform(rng) < 0.5;
        auto roots = inside ? random_roots_in(k, n, rng) : random_roots_unrestricted(k, n, rng);
        return {hset_audit(RootPolynomial(std::move(roots), random_lead(rng)), k, q)};
    }
    if (id == "hgap") {
        auto p = random_polynomial_in(k, n, rng);
        auto h = h_set(p, k, q);
        if (h.intervals.empty()) return {not_applicable("hgap", "empty H")};
        double target = uniform(rng, 0.0, h.measure), s = h.intervals.front().first;
        for (auto [a, len] : h.intervals) {
            if (target <= len) {
                s = a + target;
                break;
            }
            target -= len;
        }
        return {h_point_log_gap(p, k, q, k.wrap(s))};
    }
    if (id == "transfinite") return {transfinite_floor_audit(random_polynomial_in(k, n, rng, true), k)};
    if (id == "concentration") {
        double ratio = std::exp(uniform(rng, std::log(16.0), std::log(256.0)));
        cplx c = k.sample_interior(rng);
        double rad = std::min(k.diameter() / (2 * ratio), 0.999 * k.inside_margin(c));
        if (!(rad > 0)) return {not_applicable("concentration", "sub-disk is empty")};
        auto kp = ConvexDomain::disk(c, rad);
        int need = static_cast<int>(std::ceil(3 * std::log(2.0) / std::log(ratio) * n));
        int m = std::min(n, need + static_cast<int>(uniform(rng, 0.0, 3.0)));
        std::vector<cplx> roots;
        for (int j = 0; j < m; ++j) roots.push_back(kp.sample_interior(rng));
        auto rest = random_roots_in(k, n - m, rng);
        roots.insert(roots.end(), rest.begin(), rest.end());
        return {zero_concentration_audit(RootPolynomial(std::move(roots)), k, kp, ratio)};
    }
    if (id == "tilted" || id == "zclass") {
        auto p = random_polynomial_in(k, n, rng);
        auto zeta = k.boundary_point(random_boundary_s_with_vertices(k, rng));
        std::vector<AuditReport> out;
        for (double sigma : fan_of(zeta, bp.fan)) {
            if (id == "tilted") {
                TiltedOptions opt;
                opt.q = q;
                out.push_back(tilted_normal_audit(p, k, zeta, sigma, opt));
            } else {
                for (int sign : {-1, 1})
                    for (auto& r : zero_class_product_audits(p, k, zeta, sigma, sign)) out.push_back(std::move(r));
            }
        }
        return out;
    }
    if (id == "twopoint") {
        double a = random_boundary_s_with_vertices(k, rng);
        double step = k.diameter() / 384 * std::pow(10.0, -uniform(rng, 0.0, 2.0));
        double b = k.wrap(a + step);
        auto pa = k.boundary_point(a), pb = k.boundary_point(b);
        std::vector<cplx> roots;
        if (bp.cluster_near_corner) {
            double alpha = pa.alpha_minus, alpha_p = pb.alpha_plus + (pb.s < pa.s ? two_pi : 0.0);
            cplx u = unit(alpha), v = -unit(alpha_p), wv = pb.z - pa.z;
            double den = cross(u, v);
            if (std::abs(den) < 1e-14) return {not_applicable("twopoint", "parallel tangents")};
            cplx T = pa.z + (cross(wv, v) / den) * u;
            double R = 3 * std::max(std::abs(T - pa.z), std::abs(T - pb.z));
            int m = n / 2 + 1 + static_cast<int>(uniform(rng, 0.0, n / 2.0));
            m = std::min(m, n);
            for (int j = 0; j < m; ++j)
                roots.push_back(k.nearest_point(T + R / 3 * uniform(rng) * unit(uniform(rng, 0, two_pi))));
            auto rest = random_roots_in(k, n - m, rng);
            roots.insert(roots.end(), rest.begin(), rest.end());
        } else {
            roots = random_roots_in(k, n, rng);
        }
        return {two_point_audit(RootPolynomial(std::move(roots), random_lead(rng)), k, a, b)};
    }
    if (id == "infnorm") return {infnorm_theorem_audit(random_polynomial_in(k, n, rng), k)};
    throw InvalidInput("unknown audit id: " + id);
}

}  // namespace detail

/// One TrialResult per trial, in trial order; results do not depend on the thread count.
inline std::vector<TrialResult> run_audit_batch(const std::string& audit_id, const BatchParams& bp) {
    if (std::find(audit_ids().begin(), audit_ids().end(), audit_id) == audit_ids().end())
        throw InvalidInput("unknown audit id: " + audit_id);
    if (bp.trials < 0 || bp.q.empty()) throw InvalidInput("invalid batch parameters");
    std::vector<TrialResult> out(bp.trials);
    parallel_for(out.size(), [&](std::size_t i) {
        out[i].trial = i;
        out[i].reports = detail::run_trial(audit_id, bp, i);
        for (auto& r : out[i].reports) r.detail["trial"] = static_cast<double>(i);
    });
    return out;
}

}  // namespace osclab
