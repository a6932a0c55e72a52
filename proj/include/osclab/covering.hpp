#pragma once

#include <optional>
#include <vector>

#include "audits.hpp"

namespace osclab {

/// Tilt angle used by the covering construction: arcsin(w/d)/80.
inline double covering_theta(const ConvexDomain& k) { return std::asin(k.width() / k.diameter()) / 80; }

enum class ArcKind { elementary, component, padding };

inline const char* to_string(ArcKind k) {
    switch (k) {
        case ArcKind::elementary: return "elementary";
        case ArcKind::component: return "component";
        case ArcKind::padding: return "padding";
    }
    return "?";
}

/// Counterclockwise boundary arc [start_s, start_s + length].
struct BoundaryArc {
    double start_s = 0.0;
    double end_s = 0.0;
    double length = 0.0;
    ArcKind kind = ArcKind::elementary;
    double variation = 0.0;  ///< tangent-angle variation, endpoint jumps included
    bool contains(const ConvexDomain& k, double s) const { return arc_between(k, start_s, s) <= length; }
};

inline BoundaryArc make_arc(const ConvexDomain& k, double start, double length, ArcKind kind) {
    BoundaryArc a;
    a.start_s = k.wrap(start);
    a.length = std::min(length, k.perimeter());
    a.end_s = k.wrap(a.start_s + a.length);
    a.kind = kind;
    a.variation = tangent_variation(k, a.start_s, a.end_s);
    return a;
}

inline bool arcs_disjoint(const ConvexDomain& k, const BoundaryArc& a, const BoundaryArc& b) {
    return !(a.contains(k, b.start_s) || b.contains(k, a.start_s));
}

/// Good for the normal sigma: a tilted line misses the interior, or both tilted chords reach r.
inline bool good_for_normal(const ConvexDomain& k, const BoundaryPoint& zeta, double sigma, double r, double theta) {
    auto cm = chord(k, zeta, sigma - 2 * theta), cp = chord(k, zeta, sigma + 2 * theta);
    if (!cm.meets_interior || !cp.meets_interior) return true;
    return cm.delta >= r && cp.delta >= r;
}

/// A point is good if some inner normal of its cone (sampled by `fan` directions) is good.
inline bool good_point_test(const ConvexDomain& k, const BoundaryPoint& zeta, double r, double theta, int fan = 8) {
    for (double sigma : normal_fan(zeta, fan))
        if (good_for_normal(k, zeta, sigma, r, theta)) return true;
    return false;
}

inline bool good_point_test(const ConvexDomain& k, double s, double r, double theta, int fan = 8) {
    return good_point_test(k, k.boundary_point(s), r, theta, fan);
}

struct ElementaryArcSet {
    std::vector<BoundaryArc> arcs;
    std::vector<double> bad_points;  ///< non-good mesh parameters that generated the arcs
    int length_violations = 0;       ///< arcs longer than 4rd/w
    int variation_violations = 0;    ///< arcs whose tangent variation is below pi/2 - 2 theta
    int mesh_points = 0;
};

namespace detail {

/// Short tilted chords at zeta produce elementary arcs: [zeta, D] for the sigma - 2 theta
/// chord and [D, zeta] for the sigma + 2 theta chord.
inline void arcs_at(const ConvexDomain& k, const BoundaryPoint& zeta, double r, double theta, int fan,
                    std::vector<BoundaryArc>& out) {
    for (double sigma : normal_fan(zeta, fan)) {
        for (int sign : {-1, 1}) {
            auto c = chord(k, zeta, sigma + sign * 2 * theta);
            if (!c.meets_interior || c.delta >= r) continue;
            double sd = k.arc_param(c.D);
            if (sign < 0)
                out.push_back(make_arc(k, zeta.s, arc_between(k, zeta.s, sd), ArcKind::elementary));
            else
                out.push_back(make_arc(k, sd, arc_between(k, sd, zeta.s), ArcKind::elementary));
        }
    }
}

/// Mesh of `base` uniform points plus every vertex and points clustered geometrically
/// toward each vertex, sorted.
inline std::vector<double> boundary_mesh(const ConvexDomain& k, int base) {
    const double L = k.perimeter(), h = L / base;
    std::vector<double> s;
    for (int i = 0; i < base; ++i) s.push_back(L * i / base);
    if (!k.is_disk())
        for (std::size_t i = 0; i < k.vertex_count(); ++i) {
            double v = k.vertex_s()[i];
            s.push_back(v);
            for (int j = 0; j < 40; ++j) {
                double off = h * std::pow(0.5, j);
                s.push_back(k.wrap(v + off));
                s.push_back(k.wrap(v - off));
            }
        }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace detail

/// Elementary small arcs generated by non-good points of an adaptive boundary mesh: a
/// uniform start mesh, with every good/non-good transition bisected down to 1e-6 L.
inline ElementaryArcSet elementary_arcs(const ConvexDomain& k, double r, double theta, int fan = 8,
                                        int base_mesh = 2048) {
    if (!(r > 0)) throw InvalidInput("r must be positive");
    ElementaryArcSet out;
    const double L = k.perimeter();
    auto mesh = detail::boundary_mesh(k, base_mesh);
    std::vector<char> good(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) good[i] = good_point_test(k, mesh[i], r, theta, fan);
    std::vector<double> bad;
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        if (!good[i]) bad.push_back(mesh[i]);
        std::size_t j = (i + 1) % mesh.size();
        if (good[i] == good[j]) continue;
        double lo = mesh[i], hi = mesh[j] < lo ? mesh[j] + L : mesh[j];
        bool lo_good = good[i];
        while (hi - lo > 1e-6 * L) {
            double mid = 0.5 * (lo + hi);
            if (good_point_test(k, k.wrap(mid), r, theta, fan) == lo_good)
                lo = mid;
            else
                hi = mid;
        }
        bad.push_back(k.wrap(lo_good ? hi : lo));
    }
    out.mesh_points = static_cast<int>(mesh.size());
    const double cap = 4 * r * k.diameter() / k.width();
    const double phi = pi / 2 - 2 * theta;
    std::vector<BoundaryArc> arcs;
    for (double s : bad) detail::arcs_at(k, k.boundary_point(s), r, theta, fan, arcs);
    std::sort(arcs.begin(), arcs.end(), [](auto& a, auto& b) {
        return a.start_s != b.start_s ? a.start_s < b.start_s : a.length < b.length;
    });
    const double eps = 1e-12 * L;
    for (auto& a : arcs) {
        if (!out.arcs.empty() && std::abs(out.arcs.back().start_s - a.start_s) <= eps &&
            std::abs(out.arcs.back().length - a.length) <= eps)
            continue;
        out.arcs.push_back(a);
        if (a.length > cap * (1 + 1e-9)) ++out.length_violations;
        if (a.variation < phi - 1e-9) ++out.variation_violations;
    }
    out.bad_points = std::move(bad);
    return out;
}

/// Maximal pairwise-disjoint subfamily, greedy by earliest end measured from the cut.
/// Throws FamilyTooLarge beyond four members.
inline std::vector<BoundaryArc> maximal_disjoint_family(const ConvexDomain& k, const std::vector<BoundaryArc>& arcs,
                                                        double cut = 0.0) {
    const double L = k.perimeter();
    std::vector<std::size_t> order(arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto rel_start = [&](const BoundaryArc& a) { return arc_between(k, cut, a.start_s); };
    auto rel_end = [&](const BoundaryArc& a) { return rel_start(a) + a.length; };
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return rel_end(arcs[a]) < rel_end(arcs[b]); });
    std::vector<BoundaryArc> family;
    auto fits = [&](const BoundaryArc& a) {
        for (auto& f : family)
            if (!arcs_disjoint(k, a, f)) return false;
        return true;
    };
    for (auto i : order)
        if (rel_end(arcs[i]) <= L && fits(arcs[i])) family.push_back(arcs[i]);
    for (auto i : order)
        if (rel_end(arcs[i]) > L && fits(arcs[i])) family.push_back(arcs[i]);
    if (family.size() > 4)
        throw FamilyTooLarge("found " + std::to_string(family.size()) + " disjoint elementary arcs; at most 4 are possible");
    return family;
}

/// True when no arc of `arcs` is disjoint from every member of `family`.
inline bool is_maximal(const ConvexDomain& k, const std::vector<BoundaryArc>& arcs,
                       const std::vector<BoundaryArc>& family) {
    for (auto& a : arcs) {
        bool free = true;
        for (auto& f : family) free = free && arcs_disjoint(k, a, f);
        if (free) return false;
    }
    return true;
}

struct CoveringComponent {
    BoundaryArc arc;       ///< the component of the covering
    BoundaryArc central;   ///< selected member of the disjoint family
    double minus_length = 0.0;  ///< flank preceding the central arc
    double plus_length = 0.0;   ///< flank following the central arc
    int members = 0;            ///< family arcs inside this component
};

struct Covering {
    double r = 0.0;
    double theta = 0.0;
    double pad = 0.0;  ///< 4rd/w
    double cut_point = 0.0;
    double measure = 0.0;
    std::vector<BoundaryArc> family;
    std::vector<CoveringComponent> components;
    int elementary_count = 0;
    int elementary_length_violations = 0;
    int elementary_variation_violations = 0;
    int verification_points = 0;
    int verification_exceptions = 0;  ///< non-good mesh points outside the covering
    bool r_gate = false;              ///< 108 r d / w < d
    std::vector<AuditReport> checks;  ///< structural invariants

    std::size_t k0() const { return components.size(); }
    bool contains(const ConvexDomain& k, double s) const {
        for (auto& c : components)
            if (c.arc.contains(k, s)) return true;
        return false;
    }
    bool invariants_hold() const {
        for (auto& c : checks)
            if (c.failed()) return false;
        return verification_exceptions == 0;
    }
};

struct CoveringOptions {
    std::optional<double> theta;  ///< defaults to covering_theta(K)
    int fan = 8;
    int base_mesh = 2048;
    int verification_mesh = 10000;
};

namespace detail {

struct Interval {
    double lo, hi;  ///< unwrapped, lo in [0, L)
    std::vector<std::size_t> members;
};

/// Merge circular intervals; returns an empty vector and sets `full` if they cover everything.
inline std::vector<Interval> merge_circular(std::vector<Interval> iv, double L, bool& full) {
    full = false;
    if (iv.empty()) return iv;
    std::sort(iv.begin(), iv.end(), [](auto& a, auto& b) { return a.lo < b.lo; });
    std::vector<Interval> out{iv.front()};
    for (std::size_t i = 1; i < iv.size(); ++i) {
        if (iv[i].lo <= out.back().hi) {
            out.back().hi = std::max(out.back().hi, iv[i].hi);
            out.back().members.insert(out.back().members.end(), iv[i].members.begin(), iv[i].members.end());
        } else {
            out.push_back(iv[i]);
        }
    }
    while (out.size() > 1 && out.back().hi >= out.front().lo + L) {
        auto& b = out.back();
        b.hi = std::max(b.hi, out.front().hi + L);
        b.members.insert(b.members.end(), out.front().members.begin(), out.front().members.end());
        out.erase(out.begin());
    }
    for (auto& c : out)
        if (c.hi - c.lo >= L) full = true;
    return out;
}

}  // namespace detail

/// Pads each family arc by 4rd/w, merges, picks central arcs and a cut point, and verifies
/// that every non-good point of a verification mesh lies in the covering.
inline Covering build_covering(const ConvexDomain& k, double r, const CoveringOptions& opt = {}) {
    Covering cov;
    const double d = k.diameter(), w = k.width(), L = k.perimeter();
    cov.r = r;
    cov.theta = opt.theta.value_or(covering_theta(k));
    cov.pad = 4 * r * d / w;
    cov.r_gate = 108 * r * d / w < d;
    auto elem = elementary_arcs(k, r, cov.theta, opt.fan, opt.base_mesh);
    cov.elementary_count = static_cast<int>(elem.arcs.size());
    cov.elementary_length_violations = elem.length_violations;
    cov.elementary_variation_violations = elem.variation_violations;
    cov.family = maximal_disjoint_family(k, elem.arcs, 0.0);

    std::vector<detail::Interval> padded;
    for (std::size_t i = 0; i < cov.family.size(); ++i) {
        double lo = cov.family[i].start_s - cov.pad;
        if (lo < 0) lo += L;
        padded.push_back({lo, lo + cov.family[i].length + 2 * cov.pad, {i}});
    }
    bool full = false;
    auto merged = detail::merge_circular(padded, L, full);
    if (full) throw NoCutPoint("covering is the whole boundary; r is too large");
    for (auto& m : merged) {
        CoveringComponent c;
        c.arc = make_arc(k, m.lo, m.hi - m.lo, ArcKind::component);
        c.members = static_cast<int>(m.members.size());
        const BoundaryArc* best = nullptr;
        for (auto i : m.members) {
            auto& f = cov.family[i];
            if (!best || f.variation > best->variation + 1e-12 ||
                (std::abs(f.variation - best->variation) <= 1e-12 && f.start_s < best->start_s))
                best = &f;
        }
        c.central = *best;
        c.minus_length = arc_between(k, c.arc.start_s, c.central.start_s);
        c.plus_length = c.arc.length - c.minus_length - c.central.length;
        cov.measure += c.arc.length;
        cov.components.push_back(c);
    }
    if (cov.components.empty()) {
        cov.cut_point = 0.0;
    } else {
        double best_gap = -1;
        auto& comps = cov.components;
        std::sort(comps.begin(), comps.end(), [](auto& a, auto& b) { return a.arc.start_s < b.arc.start_s; });
        for (std::size_t i = 0; i < comps.size(); ++i) {
            auto& a = comps[i];
            auto& b = comps[(i + 1) % comps.size()];
            double gap = arc_between(k, a.arc.end_s, b.arc.start_s);
            if (comps.size() == 1) gap = L - a.arc.length;
            if (gap > best_gap) {
                best_gap = gap;
                cov.cut_point = k.wrap(a.arc.end_s + 0.5 * gap);
            }
        }
    }

    const double unit_len = r * d / w;
    auto add = [&](std::string id, double lhs, double rhs) { cov.checks.push_back(make_report(std::move(id), lhs, rhs)); };
    add("components_at_most_4", 4, static_cast<double>(cov.k0()));
    add("measure_bound", 48 * unit_len, cov.measure);
    add("elementary_length", 0, cov.elementary_length_violations);
    add("elementary_variation", 0, cov.elementary_variation_violations);
    add("family_maximal", is_maximal(k, elem.arcs, cov.family) ? 1 : 0, 1);
    for (std::size_t m = 0; m < cov.components.size(); ++m) {
        auto& c = cov.components[m];
        std::string tag = "component" + std::to_string(m) + ".";
        auto lower = make_report(tag + "length_lower", c.arc.length, 8 * unit_len);
        if (!(c.arc.length > 8 * unit_len)) lower.verdict = Verdict::fail;
        cov.checks.push_back(lower);
        add(tag + "length_upper", 24 * unit_len, c.arc.length);
        add(tag + "central_upper", 4 * unit_len, c.central.length);
        add(tag + "minus_lower", c.minus_length, 4 * unit_len);
        add(tag + "minus_upper", 16 * unit_len, c.minus_length);
        add(tag + "plus_lower", c.plus_length, 4 * unit_len);
        add(tag + "plus_upper", 16 * unit_len, c.plus_length);
        add(tag + "no_three_chain", 2, c.members);
    }
    for (int i = 0; i < opt.verification_mesh; ++i) {
        double s = L * (i + 0.5) / opt.verification_mesh;
        ++cov.verification_points;
        if (!cov.contains(k, s) && !good_point_test(k, s, r, cov.theta, opt.fan)) ++cov.verification_exceptions;
    }
    add("verification", 0, cov.verification_exceptions);
    return cov;
}

/// Smallest r on a geometric scan in [r_lo, r_hi] for which some mesh point is not good.
inline std::optional<double> smallest_bad_r(const ConvexDomain& k, double theta, double r_lo, double r_hi,
                                            int steps = 200, int fan = 8, int mesh = 2048) {
    auto pts = detail::boundary_mesh(k, mesh);
    for (int i = 0; i <= steps; ++i) {
        double r = r_lo * std::pow(r_hi / r_lo, static_cast<double>(i) / steps);
        for (double s : pts)
            if (!good_point_test(k, s, r, theta, fan)) return r;
    }
    return std::nullopt;
}

/// Largest r (bisection over [r_lo, r_hi]) for which build_covering still finds a cut point.
inline double max_r_with_cut(const ConvexDomain& k, double r_lo, double r_hi, const CoveringOptions& opt = {}) {
    auto ok = [&](double r) {
        try {
            build_covering(k, r, opt);
            return true;
        } catch (const NoCutPoint&) {
            return false;
        } catch (const FamilyTooLarge&) {
            return false;
        }
    };
    if (!ok(r_lo)) return 0.0;
    for (int it = 0; it < 40 && r_hi / r_lo > 1 + 1e-6; ++it) {
        double mid = std::sqrt(r_lo * r_hi);
        (ok(mid) ? r_lo : r_hi) = mid;
    }
    return r_lo;
}

// ---------------------------------------------------------------------------
// Degree schedule and the case split

/// r(n) = 300 (d^2/w) log n / n.
inline double r_schedule(int n, const ConvexDomain& k) {
    if (n < 2) throw InvalidInput("r(n) needs n >= 2");
    double d = k.diameter(), w = k.width();
    return 300 * d * d / w * std::log(static_cast<double>(n)) / n;
}

inline double r_gate_r1(const ConvexDomain& k) { return 1e-4 * k.width() * k.width() / k.diameter(); }
inline double n_gate_n0(const ConvexDomain& k) { return std::max(1e20, std::pow(k.diameter() / k.width(), 5)); }
inline double n_gate_n1(const ConvexDomain& k) { return std::max(73.0, 6 * std::log(k.diameter() / k.width())); }

/// Smallest n >= 2 with r(n) <= r1, by bisection on the decreasing tail of r.
inline double smallest_n_below_r1(const ConvexDomain& k) {
    double r1 = r_gate_r1(k), d = k.diameter(), w = k.width();
    auto r = [&](double n) { return 300 * d * d / w * std::log(n) / n; };
    double lo = 3, hi = 3;
    while (r(hi) > r1) hi *= 2;
    while (hi - lo > 0.5) {
        double mid = 0.5 * (lo + hi);
        (r(mid) > r1 ? lo : hi) = mid;
    }
    return std::ceil(hi);
}

enum class CaseKind { I, II_1, II_2 };

inline const char* to_string(CaseKind c) {
    switch (c) {
        case CaseKind::I: return "I";
        case CaseKind::II_1: return "II.1";
        case CaseKind::II_2: return "II.2";
    }
    return "?";
}

struct CaseSplit {
    CaseKind kind = CaseKind::I;
    int best_component = -1;
    double u = 0.0;  ///< min of |p| over the selected component
    double v = 0.0;  ///< max of |p| over the selected component
    double log_u = 0.0, log_v = 0.0;
    double int_h = 0.0, int_hl = 0.0, int_gamma = 0.0, int_l = 0.0, int_a = 0.0;  ///< scaled by ||p||_inf^{-q}
    std::vector<AuditReport> checks;  ///< chain inequalities whose gates fired
    std::map<std::string, bool> gates;
};

namespace detail {

/// Pieces of the intersection of two families of counterclockwise arcs (start, length).
inline std::vector<std::pair<double, double>> intersect_arcs(const ConvexDomain& k,
                                                             const std::vector<std::pair<double, double>>& a,
                                                             const std::vector<std::pair<double, double>>& b) {
    const double L = k.perimeter();
    std::vector<std::pair<double, double>> out;
    for (auto [a0, al] : a)
        for (auto [b0, bl] : b) {
            for (double shift : {-L, 0.0, L}) {
                double lo = std::max(a0, b0 + shift), hi = std::min(a0 + al, b0 + bl + shift);
                if (hi > lo) out.emplace_back(k.wrap(lo), hi - lo);
            }
        }
    return out;
}

/// Min and max of g over an arc: mesh plus golden refinement near the extremes.
inline std::pair<double, double> arc_log_extremes(const ConvexDomain& k, const LogBoundaryFn& g, double a, double len,
                                                  int mesh = 2048) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    std::size_t imin = 0, imax = 0;
    std::vector<double> v(mesh + 1);
    for (int i = 0; i <= mesh; ++i) {
        v[i] = g(k.point_at(a + len * i / mesh));
        if (v[i] < lo) lo = v[i], imin = i;
        if (v[i] > hi) hi = v[i], imax = i;
    }
    auto f = [&](double t) { return g(k.point_at(a + len * t)); };
    auto neg = [&](double t) { return -f(t); };
    auto bracket = [&](std::size_t i) {
        return std::pair{std::max(0.0, (i - 1.0) / mesh), std::min(1.0, (i + 1.0) / mesh)};
    };
    auto [x0, x1] = bracket(imax);
    hi = std::max(hi, golden_max(f, x0, x1, 1e-14));
    auto [y0, y1] = bracket(imin);
    lo = std::min(lo, -golden_max(neg, y0, y1, 1e-14));
    return {lo, hi};
}

}  // namespace detail

/// Case I / II.1 / II.2 classification of p against a covering, with the chain
/// inequalities of each case evaluated when their gates hold.
inline CaseSplit case_split(const RootPolynomial& p, const ConvexDomain& k, double q, const Covering& cov) {
    if (!(q >= 1.0) || is_infinite_q(q)) throw InvalidInput("case split needs finite q >= 1");
    CaseSplit cs;
    const int n = p.degree();
    const double d = k.diameter(), w = k.width();
    auto h = h_set(p, k, q);
    auto lg = [&](cplx z) { return log_abs(p, z); };
    std::vector<std::pair<double, double>> larcs;
    for (auto& c : cov.components) larcs.emplace_back(c.arc.start_s, c.arc.length);
    cs.int_h = h.integral_h;
    cs.int_gamma = h.integral_total;
    for (auto [a, len] : detail::intersect_arcs(k, h.intervals, larcs))
        cs.int_hl += integrate_exp_power(k, lg, q, h.log_sup, arc_panels(k, a, len, 1024));
    std::vector<double> comp_int;
    for (auto [a, len] : larcs) {
        comp_int.push_back(integrate_exp_power(k, lg, q, h.log_sup, arc_panels(k, a, len, 1024)));
        cs.int_l += comp_int.back();
    }
    auto grid = default_grid(k, n);
    double log_np = log_lq_norm(p, k, q, grid), log_ndp = log_lq_norm_derivative(p, k, q, grid);
    double M = std::exp(log_ndp - log_np);
    const bool r_ge_rn = n >= 2 && cov.r >= r_schedule(n, k) * (1 - 1e-12);
    const bool r_le_rn = n >= 2 && cov.r <= r_schedule(n, k) * (1 + 1e-12);
    auto add = [&](std::string id, double lhs, double rhs) { cs.checks.push_back(make_report(std::move(id), lhs, rhs)); };
    add("hset_mass", cs.int_h, 0.5 * cs.int_gamma);

    if (cs.int_hl <= 0.5 * cs.int_h) {
        cs.kind = CaseKind::I;
        add("caseI.mass_outside_cover", cs.int_h - cs.int_hl, 0.25 * cs.int_gamma);
        cs.gates["caseI.conclusion"] = n >= 73 && r_ge_rn;
        if (cs.gates["caseI.conclusion"]) add("caseI.conclusion", M, 1e-4 * w / (d * d) * n);
        return cs;
    }
    cs.best_component = static_cast<int>(std::max_element(comp_int.begin(), comp_int.end()) - comp_int.begin());
    auto& comp = cov.components[cs.best_component];
    cs.int_a = comp_int[cs.best_component];
    add("caseII.mass_on_cover", cs.int_l, 0.25 * cs.int_gamma);
    add("caseII.intA", cs.int_a, cs.int_gamma / 16);
    auto [lu, lv] = detail::arc_log_extremes(k, lg, comp.arc.start_s, comp.arc.length);
    cs.log_u = lu;
    cs.log_v = lv;
    cs.u = std::exp(lu);
    cs.v = std::exp(lv);
    const double A = comp.arc.length, unit_len = cov.r * d / w;
    if (std::log(2.0) + lu < lv) {
        cs.kind = CaseKind::II_1;
        auto lgd = [&](cplx z) { return log_abs_derivative(p, z); };
        double log_dp_a = log_lq_integral(k, lgd, q, arc_panels(k, comp.arc.start_s, A, 1024), log_ndp);
        double log_p_a = log_lq_integral(k, lg, q, arc_panels(k, comp.arc.start_s, A, 1024), log_np);
        add("caseII.1.holder", std::exp(log_dp_a - log_np), std::exp(log_p_a - log_np) / (2 * A));
        add("caseII.1.arc_norm", M, std::exp(log_dp_a - log_np));
        add("caseII.1.chain", M, 1 / (std::pow(16.0, 1 / q) * 2 * 24 * unit_len));
        cs.gates["caseII.1.floor"] = r_le_rn;
        if (r_le_rn) add("caseII.1.floor", M, w * w / (240000 * d * d * d) * n / std::log(n));
        return cs;
    }
    cs.kind = CaseKind::II_2;
    cs.gates["caseII.2.conclusion"] = cov.r <= r_gate_r1(k) && n >= n_gate_n1(k);
    if (cs.gates["caseII.2.conclusion"]) add("caseII.2.conclusion", M, 3e-4 * w / (d * d) * n);
    return cs;
}

}  // namespace osclab
