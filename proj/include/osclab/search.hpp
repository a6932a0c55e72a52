#pragma once

#include <string>
#include <vector>

#include "batch.hpp"
#include "norms.hpp"
#include "report.hpp"

namespace osclab {

enum class InitStrategy { boundary_uniform, interior_uniform, corner_clustered, center, user };

inline const char* to_string(InitStrategy s) {
    switch (s) {
        case InitStrategy::boundary_uniform: return "boundary-uniform";
        case InitStrategy::interior_uniform: return "interior-uniform";
        case InitStrategy::corner_clustered: return "corner-clustered";
        case InitStrategy::center: return "center";
        case InitStrategy::user: return "user";
    }
    return "?";
}

inline InitStrategy parse_init(const std::string& s) {
    for (auto v : {InitStrategy::boundary_uniform, InitStrategy::interior_uniform, InitStrategy::corner_clustered,
                   InitStrategy::center, InitStrategy::user})
        if (s == to_string(v)) return v;
    throw InvalidInput("unknown init strategy: " + s);
}

struct SearchConfig {
    int n = 4;
    double q = 2.0;
    long budget = 10000;
    std::uint64_t seed = 1;
    int restarts = 4;
    InitStrategy init = InitStrategy::center;
    std::vector<cplx> user_roots;
    double min_step_rel = 1e-6;  ///< stop a restart once the step falls below this times d
};

struct SearchResult {
    RootPolynomial best_p;
    double best_M = std::numeric_limits<double>::infinity();
    std::vector<std::pair<long, double>> trace;  ///< (evaluation index, incumbent M)
    std::map<std::string, double> bound_checks;
    long evaluations = 0;
    int best_restart = -1;
};

/// Canonical root configurations used as seeds and regression fixtures.
inline std::vector<std::pair<std::string, RootPolynomial>> reference_families(const ConvexDomain& k, int n) {
    std::vector<std::pair<std::string, RootPolynomial>> out;
    cplx c = k.is_disk() ? k.center() : k.centroid();
    out.emplace_back("center_power", RootPolynomial::power(n, c));
    std::vector<cplx> eq, corners;
    for (int j = 0; j < n; ++j) eq.push_back(k.point_at(k.perimeter() * j / n));
    out.emplace_back("boundary_equispaced", RootPolynomial(eq));
    cplx v0 = k.is_disk() ? k.point_at(0.0) : k.vertices()[0];
    out.emplace_back("single_vertex", RootPolynomial(std::vector<cplx>(n, v0)));
    for (int j = 0; j < n; ++j) {
        if (k.is_disk())
            corners.push_back(k.point_at(k.perimeter() * (j % 4) / 4));
        else
            corners.push_back(k.vertices()[j % k.vertex_count()]);
    }
    out.emplace_back("corner_set", RootPolynomial(corners));
    return out;
}

namespace detail {

inline std::vector<cplx> initial_roots(const ConvexDomain& k, const SearchConfig& cfg, InitStrategy s, Rng& rng) {
    const int n = cfg.n;
    std::vector<cplx> roots;
    switch (s) {
        case InitStrategy::user:
            if (static_cast<int>(cfg.user_roots.size()) != n) throw InvalidInput("user roots must have n entries");
            for (auto z : cfg.user_roots) roots.push_back(k.nearest_point(z));
            break;
        case InitStrategy::center:
            roots.assign(n, k.is_disk() ? k.center() : k.centroid());
            break;
        case InitStrategy::boundary_uniform: {
            double off = uniform(rng, 0.0, k.perimeter());
            for (int j = 0; j < n; ++j) roots.push_back(k.point_at(off + k.perimeter() * j / n));
            break;
        }
        case InitStrategy::interior_uniform:
            for (int j = 0; j < n; ++j) roots.push_back(k.sample_interior(rng));
            break;
        case InitStrategy::corner_clustered: {
            cplx corner = k.is_disk() ? k.point_at(uniform(rng, 0.0, k.perimeter()))
                                      : k.vertices()[std::uniform_int_distribution<std::size_t>(0, k.vertex_count() - 1)(rng)];
            double rad = 0.05 * k.diameter();
            for (int j = 0; j < n; ++j)
                roots.push_back(k.nearest_point(corner + rad * cplx(uniform(rng, -1, 1), uniform(rng, -1, 1))));
            break;
        }
    }
    return roots;
}

struct RestartOutcome {
    std::vector<cplx> roots;
    double M = std::numeric_limits<double>::infinity();
    std::vector<std::pair<long, double>> trace;
    long evaluations = 0;
};

/// Coordinate pattern search: each root tries four axis moves of the current step,
/// projected into K; the step halves after a sweep without improvement.
inline RestartOutcome pattern_search(const ConvexDomain& k, const SearchConfig& cfg, std::vector<cplx> roots,
                                     long budget, const QuadratureGrid& grid) {
    RestartOutcome out;
    auto eval = [&](const std::vector<cplx>& r) {
        ++out.evaluations;
        try {
            return inverse_markov_factor(RootPolynomial(r), k, cfg.q, grid);
        } catch (const ZeroNorm&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    out.roots = roots;
    out.M = eval(roots);
    out.trace.emplace_back(out.evaluations, out.M);
    const double d = k.diameter();
    double step = 0.1 * d;
    static constexpr cplx moves[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    while (out.evaluations < budget && step >= cfg.min_step_rel * d) {
        bool improved = false;
        for (std::size_t j = 0; j < roots.size() && out.evaluations < budget; ++j) {
            for (auto mv : moves) {
                if (out.evaluations >= budget) break;
                auto trial = out.roots;
                trial[j] = k.nearest_point(trial[j] + step * mv);
                if (trial[j] == out.roots[j]) continue;
                double M = eval(trial);
                if (M < out.M) {
                    out.M = M;
                    out.roots = std::move(trial);
                    out.trace.emplace_back(out.evaluations, out.M);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return out;
}

}  // namespace detail

/// Multi-restart derivative-free minimization of M_q over root sets in K.
inline SearchResult minimize_oscillation(const ConvexDomain& k, const SearchConfig& cfg) {
    if (cfg.n < 1) throw InvalidInput("degree must be at least 1");
    if (cfg.budget < 10L * cfg.n) throw BudgetTooSmall("budget must be at least 10 n");
    if (cfg.restarts < 1 || cfg.budget < cfg.restarts) throw InvalidInput("need budget >= restarts >= 1");
    auto grid = default_grid(k, cfg.n);
    static constexpr InitStrategy cycle[] = {InitStrategy::center, InitStrategy::boundary_uniform,
                                             InitStrategy::corner_clustered, InitStrategy::interior_uniform};
    std::vector<detail::RestartOutcome> runs(cfg.restarts);
    const long per = cfg.budget / cfg.restarts;
    parallel_for(runs.size(), [&](std::size_t i) {
        Rng rng = trial_rng(cfg.seed, i);
        InitStrategy s = i == 0 ? cfg.init : cycle[(i - 1) % 4];
        runs[i] = detail::pattern_search(k, cfg, detail::initial_roots(k, cfg, s, rng), per, grid);
    });
    SearchResult res;
    long offset = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (auto [e, M] : runs[i].trace)
            if (M < res.best_M) {
                res.best_M = M;
                res.trace.emplace_back(offset + e, M);
            }
        if (res.best_restart < 0 || runs[i].M < runs[res.best_restart].M) res.best_restart = static_cast<int>(i);
        offset += runs[i].evaluations;
    }
    res.best_p = RootPolynomial(runs[res.best_restart].roots);
    res.best_M = runs[res.best_restart].M;
    res.evaluations = offset;
    const double d = k.diameter(), w = k.width();
    const int n = cfg.n;
    res.bound_checks["upper_15_over_d"] = 15.0 / d * n - res.best_M;
    if (n >= 2) res.bound_checks["nlogn_floor"] = res.best_M - w * w / (240000 * d * d * d) * n / std::log(n);
    if (k.is_disk()) res.bound_checks["turan_disk"] = res.best_M - n / 2.0;
    return res;
}

/// Passes iff best_M < (15/d) n; a failure means the search budget was insufficient.
inline AuditReport upper_witness_check(const ConvexDomain& k, int n, double q, const SearchResult& r) {
    auto rep = make_report("upper_witness", 15.0 / k.diameter() * n, r.best_M, {{"n", n}, {"q", q}});
    rep.verdict = r.best_M < 15.0 / k.diameter() * n ? Verdict::pass : Verdict::fail;
    if (rep.failed()) rep.note = "SEARCH-INCOMPLETE";
    return rep;
}

/// best_M >= (1/240000)(w^2/d^3) n / log n, with the ratio best_M / floor reported.
inline AuditReport floor_consistency_check(const ConvexDomain& k, int n, double q, const SearchResult& r) {
    if (n < 2) return not_applicable("nlogn_floor", "requires n >= 2");
    double d = k.diameter(), w = k.width();
    double floor = w * w / (240000 * d * d * d) * n / std::log(n);
    return make_report("nlogn_floor", r.best_M, floor, {{"n", n}, {"q", q}, {"ratio", r.best_M / floor}});
}

}  // namespace osclab
