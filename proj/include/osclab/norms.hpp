#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "geometry.hpp"
#include "polynomial.hpp"

namespace osclab {

namespace detail {

struct GaussRule {
    std::array<double, 16> x{};
    std::array<double, 16> w{};
};

inline const GaussRule& gauss16() {
    static const GaussRule rule = [] {
        using G = boost::math::quadrature::gauss<double, 16>;
        GaussRule r;
        const auto& a = G::abscissa();
        const auto& wt = G::weights();
        std::size_t k = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            r.x[k] = -a[i];
            r.w[k++] = wt[i];
            r.x[k] = a[i];
            r.w[k++] = wt[i];
        }
        return r;
    }();
    return rule;
}

/// Smooth pieces of the boundary in arc length: polygon edges, or the whole circle.
inline std::vector<std::pair<double, double>> smooth_pieces(const ConvexDomain& k) {
    if (k.is_disk()) return {{0.0, k.perimeter()}};
    std::vector<std::pair<double, double>> out;
    auto vs = k.vertex_s();
    for (std::size_t i = 0; i < vs.size(); ++i)
        out.emplace_back(vs[i], i + 1 < vs.size() ? vs[i + 1] : k.perimeter());
    return out;
}

/// Pieces of the counterclockwise arc [a, a + len] split at vertices; endpoints unwrapped.
inline std::vector<std::pair<double, double>> arc_pieces(const ConvexDomain& k, double a, double len) {
    std::vector<std::pair<double, double>> out;
    if (len <= 0) return out;
    const double L = k.perimeter();
    a = k.wrap(a);
    double b = a + len;
    std::vector<double> cuts;
    if (!k.is_disk())
        for (int lap = 0; lap < 2; ++lap)
            for (double v : k.vertex_s()) {
                double c = v + lap * L;
                if (c > a && c < b) cuts.push_back(c);
            }
    std::sort(cuts.begin(), cuts.end());
    double lo = a;
    for (double c : cuts) {
        out.emplace_back(lo, c);
        lo = c;
    }
    out.emplace_back(lo, b);
    return out;
}

}  // namespace detail

struct QuadratureNode {
    double s = 0.0;
    cplx z{};
    double weight = 0.0;
};

/// Composite Gauss-Legendre grid: panels never straddle a vertex.
struct QuadratureGrid {
    int order = 16;
    std::vector<std::pair<double, double>> panels;
    std::vector<QuadratureNode> nodes;

    double total_weight() const {
        double t = 0.0;
        for (auto& n : nodes) t += n.weight;
        return t;
    }

    static QuadratureGrid build(const ConvexDomain& k, int min_panels = 64) {
        QuadratureGrid g;
        const double L = k.perimeter();
        for (auto [a, b] : detail::smooth_pieces(k)) {
            int m = std::max(1, static_cast<int>(std::ceil(min_panels * (b - a) / L)));
            for (int i = 0; i < m; ++i) g.panels.emplace_back(a + (b - a) * i / m, a + (b - a) * (i + 1) / m);
        }
        const auto& rule = detail::gauss16();
        for (auto [a, b] : g.panels) {
            double h = 0.5 * (b - a), c = 0.5 * (a + b);
            for (int i = 0; i < 16; ++i) {
                double s = c + h * rule.x[i];
                g.nodes.push_back({s, k.point_at(s), h * rule.w[i]});
            }
        }
        return g;
    }
};

/// Default grid density for a degree-n polynomial.
inline QuadratureGrid default_grid(const ConvexDomain& k, int n) { return QuadratureGrid::build(k, std::max(32, 2 * n)); }

/// Boundary function s -> log|f(z(s))|.
using LogBoundaryFn = std::function<double(cplx)>;

struct BoundaryMax {
    double log_value = -std::numeric_limits<double>::infinity();
    double s = 0.0;
};

/// Maximum of a log-modulus over the boundary: dense mesh, then golden-section refinement
/// of the leading local maxima.
inline BoundaryMax boundary_max(const ConvexDomain& k, const LogBoundaryFn& g, int mesh = 1024) {
    const double L = k.perimeter();
    std::vector<double> s;
    for (auto [a, b] : detail::smooth_pieces(k)) {
        int m = std::max(4, static_cast<int>(std::ceil(mesh * (b - a) / L)));
        for (int i = 0; i < m; ++i) s.push_back(a + (b - a) * i / m);
    }
    const auto n = s.size();
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = g(k.point_at(s[i]));
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < n; ++i) {
        double prev = v[(i + n - 1) % n], next = v[(i + 1) % n];
        if (v[i] >= prev && v[i] >= next) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(), [&](auto a, auto b) { return v[a] > v[b]; });
    if (peaks.size() > 12) peaks.resize(12);
    BoundaryMax best;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] > best.log_value) {
            best.log_value = v[i];
            best.s = s[i];
        }
    auto f = [&](double t) { return g(k.point_at(t)); };
    for (auto i : peaks) {
        double lo = s[(i + n - 1) % n], mid = s[i], hi = s[(i + 1) % n];
        if (lo > mid) lo -= L;
        if (hi < mid) hi += L;
        for (auto [a, b] : {std::pair{lo, mid}, std::pair{mid, hi}}) {
            double arg = 0.0;
            double val = detail::golden_max(f, a, b, 1e-12 * L, &arg);
            if (val > best.log_value) {
                best.log_value = val;
                best.s = k.wrap(arg);
            }
        }
    }
    return best;
}

struct SupNorm {
    double value = 0.0;
    double log_value = 0.0;
    BoundaryPoint argmax;
};

inline int default_mesh(int n) { return std::max(1024, 32 * n); }

inline SupNorm sup_norm(const RootPolynomial& p, const ConvexDomain& k) {
    auto m = boundary_max(k, [&](cplx z) { return log_abs(p, z); }, default_mesh(p.degree()));
    return {std::exp(m.log_value), m.log_value, k.boundary_point(m.s)};
}

inline SupNorm sup_norm_derivative(const RootPolynomial& p, const ConvexDomain& k) {
    auto m = boundary_max(k, [&](cplx z) { return log_abs_derivative(p, z); }, default_mesh(p.degree()));
    return {std::exp(m.log_value), m.log_value, k.boundary_point(m.s)};
}

namespace detail {

template <class F>
double gl_panel(F& f, double a, double b) {
    const auto& r = gauss16();
    double h = 0.5 * (b - a), c = 0.5 * (a + b), sum = 0.0;
    for (int i = 0; i < 16; ++i) sum += r.w[i] * f(c + h * r.x[i]);
    return h * sum;
}

template <class F>
double adaptive_gl(F& f, double a, double b, double whole, double abs_tol, int depth) {
    double m = 0.5 * (a + b);
    double left = gl_panel(f, a, m), right = gl_panel(f, m, b);
    double both = left + right;
    if (depth <= 0 || std::abs(both - whole) <= abs_tol) return both;
    return adaptive_gl(f, a, m, left, abs_tol, depth - 1) + adaptive_gl(f, m, b, right, abs_tol, depth - 1);
}

}  // namespace detail

inline constexpr double quadrature_rel_tol = 1e-8;

/// Adaptive integral of exp(q (g(z(s)) - shift)) over a list of smooth panels.
/// Each panel is bisected until successive estimates agree to quadrature_rel_tol
/// relative to the whole integral.
inline double integrate_exp_power(const ConvexDomain& k, const LogBoundaryFn& g, double q, double shift,
                                  const std::vector<std::pair<double, double>>& panels, double* max_seen = nullptr) {
    double seen = -std::numeric_limits<double>::infinity();
    auto f = [&](double s) {
        double v = g(k.point_at(s));
        seen = std::max(seen, v);
        return std::exp(q * (v - shift));
    };
    std::vector<double> coarse(panels.size());
    double total = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        coarse[i] = detail::gl_panel(f, panels[i].first, panels[i].second);
        total += coarse[i];
    }
    double tol = quadrature_rel_tol * 0.1 * std::abs(total) / std::max<std::size_t>(1, panels.size() / 8 + 1);
    if (!(tol > 0)) tol = 1e-300;
    double sum = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i)
        sum += detail::adaptive_gl(f, panels[i].first, panels[i].second, coarse[i], tol, 40);
    if (max_seen) *max_seen = seen;
    return sum;
}

/// log of (integral of |f|^q over the panels)^{1/q}, computed with a self-correcting shift.
inline double log_lq_integral(const ConvexDomain& k, const LogBoundaryFn& g, double q,
                              const std::vector<std::pair<double, double>>& panels, double shift) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        double seen = 0.0;
        double I = integrate_exp_power(k, g, q, shift, panels, &seen);
        if (seen <= shift + 1.0 || !std::isfinite(seen)) return shift + std::log(I) / q;
        shift = seen;
    }
    return shift + std::log(integrate_exp_power(k, g, q, shift, panels)) / q;
}

inline double panel_max(const ConvexDomain&, const LogBoundaryFn& g, const QuadratureGrid& grid) {
    double m = -std::numeric_limits<double>::infinity();
    for (auto& n : grid.nodes) m = std::max(m, g(n.z));
    return m;
}

/// Panels covering the counterclockwise arc [a, a + len], refined to the grid's panel size.
inline std::vector<std::pair<double, double>> arc_panels(const ConvexDomain& k, double a, double len,
                                                         int panels_per_perimeter = 64) {
    std::vector<std::pair<double, double>> out;
    const double h = k.perimeter() / panels_per_perimeter;
    for (auto [lo, hi] : detail::arc_pieces(k, a, len)) {
        int m = std::max(1, static_cast<int>(std::ceil((hi - lo) / h)));
        for (int i = 0; i < m; ++i) out.emplace_back(lo + (hi - lo) * i / m, lo + (hi - lo) * (i + 1) / m);
    }
    return out;
}

inline double log_lq_norm_of(const ConvexDomain& k, const LogBoundaryFn& g, double q, const QuadratureGrid& grid) {
    return log_lq_integral(k, g, q, grid.panels, panel_max(k, g, grid));
}

/// Boundary L^q norm of p; q = q_inf routes to sup_norm. Requires q >= 1.
inline double log_lq_norm(const RootPolynomial& p, const ConvexDomain& k, double q, const QuadratureGrid& grid) {
    if (is_infinite_q(q)) return sup_norm(p, k).log_value;
    if (!(q >= 1.0)) throw InvalidInput("exponent q must be >= 1");
    return log_lq_norm_of(k, [&](cplx z) { return log_abs(p, z); }, q, grid);
}

inline double lq_norm(const RootPolynomial& p, const ConvexDomain& k, double q, const QuadratureGrid& grid) {
    return std::exp(log_lq_norm(p, k, q, grid));
}

inline double lq_norm(const RootPolynomial& p, const ConvexDomain& k, double q) {
    return lq_norm(p, k, q, default_grid(k, p.degree()));
}

inline double log_lq_norm_derivative(const RootPolynomial& p, const ConvexDomain& k, double q,
                                     const QuadratureGrid& grid) {
    if (is_infinite_q(q)) return sup_norm_derivative(p, k).log_value;
    if (!(q >= 1.0)) throw InvalidInput("exponent q must be >= 1");
    return log_lq_norm_of(k, [&](cplx z) { return log_abs_derivative(p, z); }, q, grid);
}

struct NormRecord {
    double q = 0.0;
    double norm_p = 0.0;
    double norm_dp = 0.0;
    double M = 0.0;
    double log_norm_p = 0.0;
    double log_norm_dp = 0.0;
};

inline NormRecord norm_record(const RootPolynomial& p, const ConvexDomain& k, double q, const QuadratureGrid& grid) {
    NormRecord r;
    r.q = q;
    r.log_norm_p = log_lq_norm(p, k, q, grid);
    if (!std::isfinite(r.log_norm_p)) throw ZeroNorm();
    r.log_norm_dp = p.degree() == 0 ? -std::numeric_limits<double>::infinity() : log_lq_norm_derivative(p, k, q, grid);
    r.norm_p = std::exp(r.log_norm_p);
    r.norm_dp = std::exp(r.log_norm_dp);
    r.M = std::exp(r.log_norm_dp - r.log_norm_p);
    return r;
}

inline NormRecord norm_record(const RootPolynomial& p, const ConvexDomain& k, double q) {
    return norm_record(p, k, q, default_grid(k, p.degree()));
}

/// M_q(p) = ||p'||_q / ||p||_q on the boundary.
inline double inverse_markov_factor(const RootPolynomial& p, const ConvexDomain& k, double q,
                                    const QuadratureGrid& grid) {
    return norm_record(p, k, q, grid).M;
}

inline double inverse_markov_factor(const RootPolynomial& p, const ConvexDomain& k, double q) {
    return norm_record(p, k, q).M;
}

}  // namespace osclab
