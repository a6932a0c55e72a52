#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "claims.hpp"
#include "norms.hpp"
#include "report.hpp"

namespace osclab {

// ---------------------------------------------------------------------------
// Norm-level inequalities

/// ||p||_q >= (d/(2(q+1)))^{1/q} ||p||_inf n^{-2/q}; both sides divided by ||p||_inf.
inline AuditReport nikolskii_audit(const RootPolynomial& p, const ConvexDomain& k, double q, int n = 0) {
    if (n <= 0) n = std::max(1, p.degree());
    if (!(q >= 1.0) || is_infinite_q(q)) return not_applicable("nikolskii", "requires finite q >= 1");
    auto grid = default_grid(k, p.degree());
    double log_sup = sup_norm(p, k).log_value;
    double log_q = log_lq_norm(p, k, q, grid);
    double lhs = std::exp(log_q - log_sup);
    double rhs = std::pow(k.diameter() / (2 * (q + 1)), 1 / q) * std::pow(static_cast<double>(n), -2 / q);
    return make_report("nikolskii", lhs, rhs, {{"q", q}, {"n", n}, {"log_sup", log_sup}, {"log_lq", log_q}});
}

/// Threshold multiplier of the H-set: c = (1/2)(8 pi (q+1))^{-1/q}.
inline double hset_constant(double q) {
    if (is_infinite_q(q)) return 0.5;
    return 0.5 * std::pow(8 * pi * (q + 1), -1 / q);
}

struct HSet {
    std::vector<std::pair<double, double>> intervals;  ///< (start_s, length), counterclockwise
    double log_threshold = 0.0;
    double log_sup = 0.0;
    double measure = 0.0;
    double integral_h = 0.0;      ///< integral over H of |p|^q, scaled by ||p||_inf^{-q}
    double integral_total = 0.0;  ///< integral over the boundary of |p|^q, same scaling
    bool contains(const ConvexDomain& k, double s) const {
        for (auto [a, len] : intervals)
            if (arc_between(k, a, s) <= len) return true;
        return false;
    }
};

/// H = {|p| > multiplier * c n^{-2/q} ||p||_inf}, resolved on a boundary mesh with bisected ends.
inline HSet h_set(const RootPolynomial& p, const ConvexDomain& k, double q, double multiplier = 1.0, int n = 0) {
    if (n <= 0) n = std::max(1, p.degree());
    HSet h;
    h.log_sup = sup_norm(p, k).log_value;
    double exponent = is_infinite_q(q) ? 0.0 : 2 / q;
    h.log_threshold = std::log(multiplier * hset_constant(q)) - exponent * std::log(n) + h.log_sup;
    auto g = [&](double s) { return log_abs(p, k.point_at(s)) - h.log_threshold; };
    const double L = k.perimeter();
    const int mesh = std::max(4096, 64 * p.degree());
    std::vector<double> s;
    for (auto [a, b] : detail::smooth_pieces(k)) {
        int m = std::max(8, static_cast<int>(std::ceil(mesh * (b - a) / L)));
        for (int i = 0; i < m; ++i) s.push_back(a + (b - a) * i / m);
    }
    const auto N = s.size();
    std::vector<char> in(N);
    for (std::size_t i = 0; i < N; ++i) in[i] = g(s[i]) > 0;
    auto crossing = [&](double lo, double hi) {
        bool lo_in = g(lo) > 0;
        for (int it = 0; it < 80 && hi - lo > 1e-13 * L; ++it) {
            double mid = 0.5 * (lo + hi);
            if ((g(mid) > 0) == lo_in)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    std::size_t first_out = N;
    for (std::size_t i = 0; i < N; ++i)
        if (!in[i]) {
            first_out = i;
            break;
        }
    if (first_out == N) {
        h.intervals.emplace_back(0.0, L);
    } else {
        for (std::size_t step = 0; step < N; ++step) {
            std::size_t i = (first_out + step) % N, j = (i + 1) % N;
            if (!in[i] && in[j]) {
                double hi = s[j] < s[i] ? s[j] + L : s[j];
                double start = k.wrap(crossing(s[i], hi));
                std::size_t e = j;
                while (in[(e + 1) % N]) e = (e + 1) % N;
                std::size_t f = (e + 1) % N;
                double ehi = s[f] < s[e] ? s[f] + L : s[f];
                double end = crossing(s[e], ehi);
                h.intervals.emplace_back(start, arc_between(k, start, k.wrap(end)));
            }
        }
    }
    auto lg = [&](cplx z) { return log_abs(p, z); };
    double qq = is_infinite_q(q) ? 1.0 : q;
    for (auto [a, len] : h.intervals) {
        h.measure += len;
        h.integral_h += integrate_exp_power(k, lg, qq, h.log_sup, arc_panels(k, a, len, 256));
    }
    h.integral_total = integrate_exp_power(k, lg, qq, h.log_sup, default_grid(k, p.degree()).panels);
    return h;
}

/// Mass of |p|^q carried by H is at least half the total.
inline AuditReport hset_audit(const RootPolynomial& p, const ConvexDomain& k, double q) {
    if (!(q >= 1.0) || is_infinite_q(q)) return not_applicable("hset", "requires finite q >= 1");
    auto h = h_set(p, k, q);
    return make_report("hset", h.integral_h, 0.5 * h.integral_total,
                       {{"q", q}, {"measure", h.measure}, {"intervals", static_cast<double>(h.intervals.size())}});
}

/// For zeta in H: log(||p||_inf/|p(zeta)|) <= log(16 pi) + 2 log n, and <= (107/40) log n when n >= 73.
inline AuditReport h_point_log_gap(const RootPolynomial& p, const ConvexDomain& k, double q, double s, int n = 0) {
    if (n <= 0) n = std::max(1, p.degree());
    double log_sup = sup_norm(p, k).log_value;
    double exponent = is_infinite_q(q) ? 0.0 : 2 / q;
    double log_thr = std::log(hset_constant(q)) - exponent * std::log(n) + log_sup;
    double lp = log_abs(p, k.point_at(s));
    if (!(lp > log_thr)) return not_applicable("hgap", "point not in H", {{"log_p", lp}, {"log_threshold", log_thr}});
    double gap = log_sup - lp;
    std::vector<AuditReport> parts{make_report("general", std::log(16 * pi) + 2 * std::log(n), gap)};
    if (n >= 73) parts.push_back(make_report("sharp", 107.0 / 40.0 * std::log(n), gap));
    auto r = worst_of("hgap", parts);
    r.detail["gap"] = gap;
    r.detail["threshold_gap"] = log_sup - log_thr;
    r.detail["q"] = q;
    r.detail["n"] = n;
    return r;
}

// ---------------------------------------------------------------------------
// Chebyshev and transfinite-diameter floors

inline double chebyshev_floor(double J_length, int k) {
    if (!(J_length > 0) || k < 1) throw InvalidInput("chebyshev floor needs |J| > 0 and k >= 1");
    return 2 * std::pow(J_length / 4, k);
}

/// Maximum of g along the segment [a, b]: mesh plus golden-section refinement at peaks.
template <class G>
std::pair<double, double> segment_log_max(G&& g, cplx a, cplx b, int mesh = 2048) {
    std::vector<double> v(mesh + 1);
    for (int i = 0; i <= mesh; ++i) v[i] = g(a + (b - a) * (static_cast<double>(i) / mesh));
    double best = -std::numeric_limits<double>::infinity(), best_t = 0.0;
    for (int i = 0; i <= mesh; ++i)
        if (v[i] > best) {
            best = v[i];
            best_t = static_cast<double>(i) / mesh;
        }
    auto f = [&](double t) { return g(a + (b - a) * t); };
    for (int i = 0; i <= mesh; ++i) {
        bool peak = (i == 0 || v[i] >= v[i - 1]) && (i == mesh || v[i] >= v[i + 1]);
        if (!peak) continue;
        double lo = std::max(0.0, (i - 1.0) / mesh), hi = std::min(1.0, (i + 1.0) / mesh), t = 0.0;
        double val = detail::golden_max(f, lo, hi, 1e-14, &t);
        if (val > best) {
            best = val;
            best_t = t;
        }
    }
    return {best, best_t};
}

/// Roots of the monic Chebyshev polynomial of degree k transplanted to [a, b].
inline std::vector<cplx> chebyshev_witness_roots(cplx a, cplx b, int k) {
    std::vector<cplx> r;
    for (int j = 1; j <= k; ++j) {
        double x = std::cos((2.0 * j - 1) * pi / (2.0 * k));
        r.push_back(0.5 * (a + b) + 0.5 * (b - a) * x);
    }
    return r;
}

inline double segment_sup(std::span<const cplx> roots, cplx a, cplx b, int mesh = 2048) {
    auto g = [&](cplx z) {
        double s = 0.0;
        for (auto r : roots) s += std::log(std::abs(z - r));
        return s;
    };
    return std::exp(segment_log_max(g, a, b, mesh).first);
}

struct ChebyshevCheck {
    double floor = 0.0;
    double witness_sup = 0.0;
    double search_min = 0.0;
    int candidates = 0;
};

/// Random search over monic degree-k polynomials (uniform roots near J and perturbed Chebyshev
/// roots) for the smallest sup-norm on J = [0, |J|].
inline ChebyshevCheck chebyshev_search(double J_length, int k, int candidates, Rng& rng) {
    ChebyshevCheck c;
    c.floor = chebyshev_floor(J_length, k);
    cplx a = 0.0, b = J_length;
    auto cheb = chebyshev_witness_roots(a, b, k);
    c.witness_sup = segment_sup(cheb, a, b);
    c.search_min = std::numeric_limits<double>::infinity();
    c.candidates = candidates;
    std::vector<cplx> roots(k);
    for (int i = 0; i < candidates; ++i) {
        bool perturb = i % 2 == 0;
        double scale = J_length * std::pow(10.0, -uniform(rng, 0.5, 4.0));
        for (int j = 0; j < k; ++j) {
            if (perturb)
                roots[j] = cheb[j] + cplx(uniform(rng, -scale, scale), uniform(rng, -scale, scale));
            else
                roots[j] = cplx(uniform(rng, -0.25, 1.25) * J_length, uniform(rng, -0.25, 0.25) * J_length);
        }
        c.search_min = std::min(c.search_min, segment_sup(roots, a, b, 256));
    }
    return c;
}

inline AuditReport chebyshev_audit(double J_length, int k, int candidates, Rng& rng) {
    auto c = chebyshev_search(J_length, k, candidates, rng);
    AuditReport r = make_report("chebyshev", c.search_min, c.floor,
                                {{"J", J_length}, {"k", k}, {"witness_sup", c.witness_sup},
                                 {"witness_error", std::abs(c.witness_sup - c.floor)}});
    r.tol = 1e-6;
    bool witness_ok = std::abs(c.witness_sup - c.floor) <= 1e-9 * std::max(1.0, c.floor);
    r.verdict = r.margin >= -r.tol && witness_ok ? Verdict::pass : Verdict::fail;
    return r;
}

/// Monic p with roots in K: ||p||_inf >= (d/4)^n. Reported as 1 >= (d/4)^n / ||p||_inf.
inline AuditReport transfinite_floor_audit(const RootPolynomial& p, const ConvexDomain& k) {
    if (p.lead() != cplx(1.0)) return not_applicable("transfinite", "polynomial is not monic");
    if (!p.roots_in(k)) return not_applicable("transfinite", "roots outside K");
    double log_sup = sup_norm(p, k).log_value;
    double log_floor = p.degree() * std::log(k.diameter() / 4);
    return make_report("transfinite", 1.0, std::exp(log_floor - log_sup), {{"log_sup", log_sup}, {"log_floor", log_floor}});
}

/// K' inside K with d' <= d/k_ratio and enough roots in K' forces ||p||_{K'} < 2^{-n} ||p||_K.
/// Sides are compared in log form: lhs = log(2^{-n} ||p||_K), rhs = log ||p||_{K'}.
inline AuditReport zero_concentration_audit(const RootPolynomial& p, const ConvexDomain& k, const ConvexDomain& kp,
                                            double k_ratio) {
    const int n = p.degree();
    if (!(k_ratio > 10)) return not_applicable("concentration", "k_ratio must exceed 10");
    if (kp.diameter() > k.diameter() / k_ratio * (1 + 1e-12))
        return not_applicable("concentration", "d' exceeds d/k_ratio");
    if (!p.roots_in(k)) return not_applicable("concentration", "roots outside K");
    bool inside = kp.is_disk() ? k.inside_margin(kp.center()) >= kp.radius() - k.tol() : true;
    if (!kp.is_disk())
        for (auto v : kp.vertices()) inside = inside && k.contains(v);
    if (!inside) return not_applicable("concentration", "K' not contained in K");
    int m = 0;
    for (auto z : p.roots()) m += kp.contains(z) ? 1 : 0;
    double need = 3 * std::log(2.0) / std::log(k_ratio) * n;
    if (m < need) return not_applicable("concentration", "too few roots in K'", {{"m", m}, {"required", need}});
    double lhs = sup_norm(p, k).log_value - n * std::log(2.0);
    double rhs = sup_norm(p, kp).log_value;
    auto r = make_report("concentration", lhs, rhs, {{"m", m}, {"required", need}, {"k_ratio", k_ratio}});
    r.note = "log scale";
    return r;
}

// ---------------------------------------------------------------------------
// Tilted normal machinery

/// Tilt angle of the pointwise lemma: arctan(w/d)/20.
inline double tilted_theta(const ConvexDomain& k) { return std::atan(k.width() / k.diameter()) / 20; }

/// Coordinates with zeta at 0, the chosen supporting line on the real axis and K above it.
/// sign = -1 keeps the sigma - 2 theta chord at direction pi/2 - 2 theta; sign = +1 mirrors
/// so that the sigma + 2 theta chord takes that direction.
struct ZeroFrame {
    cplx zeta{};
    double sigma = 0.0;
    int sign = -1;
    cplx operator()(cplx z) const {
        cplx w = (z - zeta) * unit(pi / 2 - sigma);
        return sign < 0 ? w : -std::conj(w);
    }
};

struct ZeroPartition {
    std::array<std::vector<int>, 5> classes;  ///< indices into p.roots()
    std::vector<cplx> frame_roots;
    double theta = 0.0;
    double delta = 0.0;
    int mu() const { return static_cast<int>(classes[0].size()); }
    int nu() const { return static_cast<int>(classes[1].size()); }
    int kappa() const { return static_cast<int>(classes[2].size()); }
    int k() const { return static_cast<int>(classes[3].size()); }
    int m() const { return static_cast<int>(classes[4].size()); }
};

/// Angle of a frame root clamped to [0, pi] (K lies in the closed upper half-plane).
inline double frame_angle(cplx w) {
    double a = std::arg(w);
    if (a < 0) a = a > -pi / 2 ? 0.0 : pi;
    return a;
}

/// Five-way split of the roots around zeta for chord length delta and tilt theta.
inline ZeroPartition classify_zeros(const RootPolynomial& p, const ZeroFrame& frame, double theta, double delta,
                                    double scale) {
    if (!(delta > 0)) throw InvalidInput("zero classification needs a positive chord");
    ZeroPartition z;
    z.theta = theta;
    z.delta = delta;
    auto roots = p.roots();
    for (std::size_t j = 0; j < roots.size(); ++j) {
        cplx w = frame(roots[j]);
        if (std::abs(w) < singular_rel_tol * scale) throw SingularPoint();
        z.frame_roots.push_back(w);
        double phi = frame_angle(w);
        int cls;
        if (phi <= theta)
            cls = 0;
        else if (phi >= pi - theta)
            cls = 4;
        else if ((unit(2 * theta) * w).imag() < 3 * delta / 8)
            cls = 1;
        else if (std::abs(w) <= 1.25 * delta)
            cls = 2;
        else
            cls = 3;
        z.classes[cls].push_back(static_cast<int>(j));
    }
    return z;
}

inline ZeroPartition classify_zeros(const RootPolynomial& p, const ConvexDomain& k, const BoundaryPoint& zeta,
                                    double sigma, int sign = -1) {
    double theta = tilted_theta(k);
    auto c = chord(k, zeta, sigma + sign * 2 * theta);
    if (!(c.delta > k.tol())) throw InvalidInput("zero chord");
    return classify_zeros(p, ZeroFrame{zeta.z, sigma, sign}, theta, c.delta, k.diameter());
}

enum class TiltedBranch { automatic, i, ii, iii };

struct TiltedOptions {
    TiltedBranch branch = TiltedBranch::automatic;
    double q = 2.0;  ///< exponent defining H for the log n refinement
};

/// log of the maximum of |p| on the chord segment [zeta, D].
inline double chord_log_max(const RootPolynomial& p, cplx zeta, cplx D) {
    return segment_log_max([&](cplx z) { return log_abs(p, z); }, zeta, D, 4096).first;
}

/// Pointwise tilted normal estimates at zeta for inner normal sigma.
inline AuditReport tilted_normal_audit(const RootPolynomial& p, const ConvexDomain& k, const BoundaryPoint& zeta,
                                       double sigma, const TiltedOptions& opt = {}) {
    const double d = k.diameter(), w = k.width();
    const int n = p.degree();
    if (n < 1) return not_applicable("tilted", "degree zero");
    if (!p.roots_in(k)) return not_applicable("tilted", "roots outside K");
    cplx ld;
    try {
        ld = log_derivative(p, zeta.z, d);
    } catch (const SingularPoint&) {
        return excluded("tilted", "root at zeta");
    }
    const double M = std::abs(ld);
    const double theta = tilted_theta(k);
    Chord cm = chord(k, zeta, sigma - 2 * theta), cp = chord(k, zeta, sigma + 2 * theta);
    std::map<std::string, double> info{{"delta_minus", cm.delta}, {"delta_plus", cp.delta}, {"theta", theta},
                                       {"psi", 20 * theta}, {"M", M}};
    std::vector<AuditReport> parts;
    auto want = [&](TiltedBranch b) { return opt.branch == TiltedBranch::automatic || opt.branch == b; };
    const double lp = log_abs(p, zeta.z);
    double log_sup = sup_norm(p, k).log_value;
    double exponent = is_infinite_q(opt.q) ? 0.0 : 2 / opt.q;
    bool in_h = lp > std::log(hset_constant(opt.q)) - exponent * std::log(n) + log_sup;
    info["in_H"] = in_h;
    auto estimate = [&](const Chord& c, const std::string& tag) {
        double main = 0.001 * w / (d * d) * n;
        double chord_gap = chord_log_max(p, zeta.z, c.D) - lp;
        parts.push_back(make_report(tag + ".chordmax", M, main - 2 / (39 * c.delta) * chord_gap));
        parts.push_back(make_report(tag + ".supnorm", M, main - 2 / (39 * c.delta) * (log_sup - lp)));
        if (in_h && n >= 73) parts.push_back(make_report(tag + ".logn", M, main - 0.15 / c.delta * std::log(n)));
    };
    bool miss = !cm.meets_interior || !cp.meets_interior;
    double dmin = std::min(cm.delta, cp.delta), dmax = std::max(cm.delta, cp.delta);
    int cases = 0;
    if (miss && want(TiltedBranch::i)) {
        parts.push_back(make_report("case_i", M, n / (2 * d)));
        cases |= 1;
    }
    if (!miss && dmin > 0 && dmin < w && want(TiltedBranch::ii)) {
        estimate(cm.delta <= cp.delta ? cm : cp, "case_ii");
        cases |= 2;
    }
    if (dmax >= w / 2 && want(TiltedBranch::iii)) {
        if (cm.delta > k.tol()) estimate(cm, "case_iii.minus");
        if (cp.delta > k.tol()) estimate(cp, "case_iii.plus");
        cases |= 4;
    }
    info["cases"] = cases;
    if (parts.empty()) return not_applicable("tilted", "no case preconditions hold", info);
    auto r = worst_of("tilted", parts);
    for (auto& [key, v] : info) r.detail[key] = v;
    return r;
}

namespace detail {

inline double class_log_product(const ZeroPartition& z, int cls, cplx tau) {
    double s = 0.0;
    for (int j : z.classes[cls]) {
        cplx w = z.frame_roots[j];
        s += std::log(std::abs(w - tau)) - std::log(std::abs(w));
    }
    return s;
}

}  // namespace detail

/// Per-class product bounds over J = {t delta e^{i(pi/2 - 2 theta)} : 3/4 <= t <= 1} and the
/// resulting lower bound on |p'/p(zeta)|. Uses chord sign -1 (sigma - 2 theta) or +1.
inline std::vector<AuditReport> zero_class_product_audits(const RootPolynomial& p, const ConvexDomain& k,
                                                          const BoundaryPoint& zeta, double sigma, int sign,
                                                          int grid_points = 4096) {
    const double d = k.diameter(), w = k.width(), theta = tilted_theta(k);
    const int n = p.degree();
    Chord cm = chord(k, zeta, sigma - 2 * theta), cp = chord(k, zeta, sigma + 2 * theta);
    const Chord& c = sign < 0 ? cm : cp;
    const Chord& other = sign < 0 ? cp : cm;
    if (!(c.delta > k.tol()) || !c.meets_interior) return {not_applicable("zclass", "chord misses the interior")};
    bool is_min = c.delta <= other.delta && other.meets_interior;
    if (!(c.delta >= w / 2 || is_min)) return {not_applicable("zclass", "chord is neither the shorter one nor >= w/2")};
    if (!p.roots_in(k)) return {not_applicable("zclass", "roots outside K")};
    ZeroPartition z;
    double M;
    try {
        z = classify_zeros(p, ZeroFrame{zeta.z, sigma, sign}, theta, c.delta, d);
        M = std::abs(log_derivative(p, zeta.z, d));
    } catch (const SingularPoint&) {
        return {excluded("zclass", "root at zeta")};
    }
    const double delta = c.delta, st = std::sin(theta);
    const cplx dir = delta * unit(pi / 2 - 2 * theta);
    std::array<double, 5> minv;
    minv.fill(std::numeric_limits<double>::infinity());
    double best3 = -std::numeric_limits<double>::infinity(), t3 = 0.75;
    double best_total = -std::numeric_limits<double>::infinity(), t_total = 0.75;
    for (int i = 0; i < grid_points; ++i) {
        double t = 0.75 + 0.25 * i / (grid_points - 1);
        cplx tau = t * dir;
        double total = 0.0;
        for (int cls = 0; cls < 5; ++cls) {
            double v = detail::class_log_product(z, cls, tau);
            minv[cls] = std::min(minv[cls], v);
            total += v;
            if (cls == 2 && v > best3) {
                best3 = v;
                t3 = t;
            }
        }
        if (total > best_total) {
            best_total = total;
            t_total = t;
        }
    }
    // One Newton step on t -> sum log|w_j - t dir| over the third class.
    if (z.kappa() > 0) {
        double g1 = 0.0, g2 = 0.0;
        cplx tau = t3 * dir;
        for (int j : z.classes[2]) {
            cplx diff = tau - z.frame_roots[j];
            double nd = std::norm(diff), re = dot(dir, diff);
            g1 += re / nd;
            g2 += std::norm(dir) / nd - 2 * re * re / (nd * nd);
        }
        if (g2 < 0) {
            double t_new = std::clamp(t3 - g1 / g2, 0.75, 1.0);
            double v = detail::class_log_product(z, 2, t_new * dir);
            if (v > best3) {
                best3 = v;
                t3 = t_new;
            }
        }
    }
    double t0 = z.kappa() > 0 ? t3 : t_total;
    auto sum_sin_over_r = [&](int cls) {
        double s = 0.0;
        for (int j : z.classes[cls]) {
            cplx wj = z.frame_roots[j];
            s += std::sin(frame_angle(wj)) / std::abs(wj);
        }
        return s;
    };
    std::map<std::string, double> info{{"mu", z.mu()},     {"nu", z.nu()}, {"kappa", z.kappa()}, {"k", z.k()},
                                       {"m", z.m()},       {"delta", delta}, {"theta", theta}, {"t0", t0},
                                       {"sign", sign}};
    std::vector<AuditReport> out;
    auto add = [&](std::string id, double lhs, double rhs) {
        auto r = make_report(std::move(id), lhs, rhs, info);
        r.note = "log scale";
        out.push_back(std::move(r));
    };
    add("zclass.Z1", minv[0], 0.5 * st * delta * z.mu() / d);
    add("zclass.Z2", minv[1], 0.0);
    double log_r3 = 0.0;
    for (int j : z.classes[2]) log_r3 += std::log(std::abs(z.frame_roots[j]));
    double cheb = z.kappa() > 0 ? std::log(2.0) + z.kappa() * std::log(delta / 16) - log_r3 : 0.0;
    add("zclass.Z3", best3, cheb);
    add("zclass.Z3.twentieth", cheb, -z.kappa() * std::log(20.0));
    add("zclass.Z3.exp", best3, -19 * delta * sum_sin_over_r(2));
    add("zclass.Z4", minv[3], -9 * delta * sum_sin_over_r(3));
    add("zclass.Z5", minv[4], st * delta * z.m() / (2 * d));
    double log_ratio = 0.0;
    for (int cls = 0; cls < 5; ++cls) log_ratio += detail::class_log_product(z, cls, t0 * dir);
    auto chain = make_report("zclass.chain", M, st / (39 * d) * n - 2 / (39 * delta) * log_ratio, info);
    out.push_back(std::move(chain));
    return out;
}

// ---------------------------------------------------------------------------
// Two-point alternative

struct TwoPointOptions {
    std::optional<double> alpha;
    std::optional<double> alpha_prime;
};

/// At zeta (arc length a) preceding zeta' (arc length b) with s <= s0(beta), either both values
/// are <= 2^{-n} ||p||_inf or |p'/p(zeta)| + |p'/p(zeta')| >= 3 sin(beta) n / (8d).
inline AuditReport two_point_audit(const RootPolynomial& p, const ConvexDomain& k, double a, double b,
                                   const TwoPointOptions& opt = {}) {
    const double d = k.diameter();
    const int n = p.degree();
    auto pa = k.boundary_point(a), pb = k.boundary_point(b);
    double alpha = opt.alpha.value_or(pa.alpha_minus);
    double alpha_p = opt.alpha_prime.value_or(pb.alpha_plus + (pb.s < pa.s ? two_pi : 0.0));
    double turn = alpha_p - alpha;
    if (!(turn > 0 && turn < pi)) return not_applicable("twopoint", "tangent turn outside (0, pi)");
    if (!p.roots_in(k)) return not_applicable("twopoint", "roots outside K");
    double beta = pi - turn;
    double s = std::abs(pb.z - pa.z);
    double s0 = std::min(1.0, 2 * std::sin(beta)) / 384 * d;
    std::map<std::string, double> info{{"beta", beta}, {"s", s}, {"s0", s0}};
    if (s > s0) return not_applicable("twopoint", "s exceeds s0", info);
    cplx u = unit(alpha), v = -unit(alpha_p), wv = pb.z - pa.z;
    cplx T = pa.z + (cross(wv, v) / cross(u, v)) * u;
    double R = 3 * std::max(std::abs(T - pa.z), std::abs(T - pb.z));
    int mu = 0;
    for (auto z : p.roots()) mu += std::abs(z - T) < R ? 1 : 0;
    int nu = n - mu;
    info["R"] = R;
    info["mu"] = mu;
    info["nu"] = nu;
    double M1, M2;
    try {
        M1 = std::abs(log_derivative(p, pa.z, d));
        M2 = std::abs(log_derivative(p, pb.z, d));
    } catch (const SingularPoint&) {
        return excluded("twopoint", "root at zeta or zeta'");
    }
    double log_sup = sup_norm(p, k).log_value;
    double lp1 = log_abs(p, pa.z), lp2 = log_abs(p, pb.z);
    double alt1_margin = (log_sup - n * std::log(2.0)) - std::max(lp1, lp2);
    double alt2_lhs = M1 + M2, alt2_rhs = 3 * std::sin(beta) * n / (8 * d);
    double far = 0.0;
    for (auto z : p.roots())
        if (std::abs(z - T) >= R)
            far += (unit(alpha) / (pa.z - z)).imag() + (unit(alpha_p) / (pb.z - z)).imag();
    auto alt2 = make_report("twopoint", alt2_lhs, alt2_rhs, info);
    bool alt1 = alt1_margin >= -audit_rel_tol * (std::abs(log_sup) + std::abs(lp1) + std::abs(lp2));
    auto farsum = make_report("farsum", far, 3 * std::sin(beta) / (4 * d) * nu);
    alt2.detail["alt1_log_margin"] = alt1_margin;
    alt2.detail["alt1"] = alt1;
    alt2.detail["alt2"] = alt2.passed();
    alt2.detail["farsum_margin"] = farsum.margin;
    if (n >= 15 && alt1) {
        double log_thr_q1 = std::log(hset_constant(1.0)) - 2 * std::log(n) + log_sup;
        alt2.detail["outside_H_margin"] = log_thr_q1 - std::max(lp1, lp2);
    }
    bool ok = alt1 || alt2.passed();
    if (2 * mu >= n && !alt1) {
        ok = false;
        alt2.note = "at least n/2 roots near T but values are not small";
    }
    if (farsum.failed()) {
        ok = false;
        alt2.note = "far-root sum bound violated";
    }
    alt2.verdict = ok ? Verdict::pass : Verdict::fail;
    return alt2;
}

// ---------------------------------------------------------------------------
// Norm theorems

/// ||p'||_inf >= 0.001 (w/d^2) n ||p||_inf.
inline AuditReport infnorm_theorem_audit(const RootPolynomial& p, const ConvexDomain& k) {
    if (!p.roots_in(k)) return not_applicable("infnorm", "roots outside K");
    double lhs = std::exp(sup_norm_derivative(p, k).log_value - sup_norm(p, k).log_value);
    double rhs = 0.001 * k.width() / (k.diameter() * k.diameter()) * p.degree();
    return make_report("infnorm", lhs, rhs);
}

/// ||p'||_q >= h^4/(3000 d^5) n ||p||_q when the depth h is positive.
inline AuditReport depth_theorem_audit(const RootPolynomial& p, const ConvexDomain& k, double q,
                                       std::optional<double> h_known = std::nullopt) {
    double h = h_known.value_or(depth(k));
    if (!(h > 0)) return not_applicable("depth", "depth is zero", {{"h", h}});
    if (!p.roots_in(k)) return not_applicable("depth", "roots outside K");
    double d = k.diameter();
    double rhs = std::pow(h, 4) / (3000 * std::pow(d, 5)) * p.degree();
    return make_report("depth", inverse_markov_factor(p, k, q), rhs, {{"h", h}, {"q", q}});
}

/// Disk of radius R containing the roots, z on its circle: |p'(z)| >= n/(2R) |p(z)|.
inline AuditReport turan_pointwise_audit(const RootPolynomial& p, const ConvexDomain& disk, double s) {
    if (!disk.is_disk()) return not_applicable("turan", "requires a disk");
    cplx z = disk.point_at(s);
    try {
        double lhs = std::abs(log_derivative(p, z, disk.diameter()));
        return make_report("turan", lhs, p.degree() / (2 * disk.radius()));
    } catch (const SingularPoint&) {
        return excluded("turan", "root at z");
    }
}

}  // namespace osclab
