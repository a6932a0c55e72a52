#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace osclab {

/// K intersected with the closed half-plane {z : cross(b - a, z - a) <= 0}, as a polygon.
/// Only meaningful for polygon domains.
inline std::vector<cplx> clip_right_of(const ConvexDomain& k, cplx a, cplx b) {
    std::vector<cplx> out;
    auto verts = k.vertices();
    const auto n = verts.size();
    cplx dir = b - a;
    auto side = [&](cplx z) { return cross(dir, z - a) / std::abs(dir); };
    for (std::size_t i = 0; i < n; ++i) {
        cplx p = verts[i], q = verts[(i + 1) % n];
        double sp = side(p), sq = side(q);
        if (sp <= 0) out.push_back(p);
        if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) out.push_back(p + (sp / (sp - sq)) * (q - p));
    }
    return out;
}

/// Endpoints and vertices of the counterclockwise boundary arc from a to b; their hull is
/// the small side of the chord.
inline std::vector<cplx> arc_points(const ConvexDomain& k, double a, double b) {
    std::vector<cplx> out{k.point_at(a)};
    const double span = arc_between(k, a, b);
    for (double v : k.vertex_s()) {
        double t = arc_between(k, a, v);
        if (t > 0.0 && t < span) out.push_back(k.point_at(v));
    }
    out.push_back(k.point_at(b));
    return out;
}

inline double point_set_diameter(const std::vector<cplx>& pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, std::abs(pts[i] - pts[j]));
    return d;
}

/// Bounding box of K on the right of the directed line a -> b.
inline std::optional<Box> right_region_box(const ConvexDomain& k, cplx a, cplx b) {
    std::vector<cplx> pts;
    if (!k.is_disk()) {
        pts = clip_right_of(k, a, b);
    } else {
        cplx u = (b - a) / std::abs(b - a);
        if (auto iv = k.line_interval(a, u)) {
            pts.push_back(a + iv->first * u);
            pts.push_back(a + iv->second * u);
        }
        for (int j = 0; j < 4; ++j) {
            cplx e = k.center() + k.radius() * std::pow(cplx(0, 1), j);
            if (cross(b - a, e - a) <= 0) pts.push_back(e);
        }
    }
    if (pts.empty()) return std::nullopt;
    Box box{pts[0].real(), pts[0].real(), pts[0].imag(), pts[0].imag()};
    for (auto p : pts) {
        box.xmin = std::min(box.xmin, p.real());
        box.xmax = std::max(box.xmax, p.real());
        box.ymin = std::min(box.ymin, p.imag());
        box.ymax = std::max(box.ymax, p.imag());
    }
    return box;
}

/// Signed distance to the boundary of triangle (a, b, c); positive inside.
inline double triangle_margin(cplx a, cplx b, cplx c, cplx z) {
    double orient = cross(b - a, c - a) > 0 ? 1.0 : -1.0;
    auto edge = [&](cplx p, cplx q) { return orient * cross(q - p, z - p) / std::abs(q - p); };
    return std::min({edge(a, b), edge(b, c), edge(c, a)});
}

struct TriangleContainmentReport {
    bool applicable = false;
    std::string reason;
    cplx T{};
    int samples_tested = 0;
    int violations = 0;
    double min_margin = 0.0;  ///< smallest triangle margin over tested points
};

/// Half-lines zeta + e^{i t} R+ and zeta' + e^{i t'} R+ meet at T; every sampled point of
/// K on T's side of the chord line must lie in triangle (zeta, T, zeta').
inline TriangleContainmentReport triangle_containment_check(const ConvexDomain& k, cplx zeta, cplx zeta_prime,
                                                            double t, double t_prime, Rng& rng,
                                                            int samples = 10000) {
    TriangleContainmentReport r;
    cplx u = unit(t), v = -unit(t_prime), w = zeta_prime - zeta;
    double den = cross(u, v);
    if (std::abs(den) < 1e-14) {
        r.reason = "half-lines are parallel";
        return r;
    }
    double a = cross(w, v) / den, b = cross(u, w) / den;
    if (a <= 0 || b <= 0) {
        r.reason = "half-lines diverge";
        return r;
    }
    r.T = zeta + a * u;
    double tside = cross(w, r.T - zeta);
    if (std::abs(tside) <= k.tol() * std::abs(w)) {
        r.reason = "T lies on the chord line";
        return r;
    }
    r.applicable = true;
    // Orient the chord so that T is on its right.
    cplx p = tside < 0 ? zeta : zeta_prime, q = tside < 0 ? zeta_prime : zeta;
    const double eps = k.tol();
    r.min_margin = std::numeric_limits<double>::infinity();
    auto test = [&](cplx z) {
        ++r.samples_tested;
        double m = triangle_margin(zeta, r.T, zeta_prime, z);
        r.min_margin = std::min(r.min_margin, m);
        if (m < -eps) ++r.violations;
    };
    if (!k.is_disk())
        for (auto z : clip_right_of(k, p, q))
            if (cross(q - p, z - p) < 0) test(z);
    auto box = right_region_box(k, p, q);
    if (!box) return r;
    int accepted = 0;
    for (int tries = 0; accepted < samples && tries < 200 * samples; ++tries) {
        cplx z(uniform(rng, box->xmin, box->xmax), uniform(rng, box->ymin, box->ymax));
        if (!k.contains(z, 0.0) || !(cross(q - p, z - p) < 0)) continue;
        ++accepted;
        test(z);
    }
    return r;
}

struct AngleDiamArcRecord {
    bool applicable = false;
    bool degenerate_tangent = false;
    std::string reason;
    double s = 0.0;           ///< chord length |zeta - zeta'|
    double alpha = 0.0;       ///< tangent angle at zeta
    double alpha_prime = 0.0; ///< tangent angle at zeta'
    double beta = 0.0;
    cplx T{};
    double diam_small = 0.0;
    double arc_small = 0.0;
    double beta_margin = 0.0;  ///< beta - arcsin((w - s)/d)
    double diam_margin = 0.0;  ///< s d/(w - s) - diam_small
    double arc_margin = 0.0;   ///< 2 s d/(w - s) - arc_small
    double triangle_margin = 0.0;  ///< min margin of small-side vertices inside (zeta, T, zeta')
    bool bounds_ok = false;
};

/// Checks the angle, small-side diameter and small-arc bounds for the counterclockwise
/// arc from a to b. Tangents default to the extreme supporting directions (alpha_- at a,
/// alpha_+ at b); explicit choices must come from the respective tangent intervals.
inline AngleDiamArcRecord angle_diam_arc_bounds(const ConvexDomain& k, double a, double b,
                                                std::optional<double> alpha_in = std::nullopt,
                                                std::optional<double> alpha_prime_in = std::nullopt) {
    AngleDiamArcRecord r;
    auto pa = k.boundary_point(a), pb = k.boundary_point(b);
    const double d = k.diameter(), w = k.width(), eps = k.tol();
    r.s = std::abs(pb.z - pa.z);
    if (!(r.s > eps) || !(r.s < w)) {
        r.reason = "requires 0 < s < w";
        return r;
    }
    r.alpha = alpha_in.value_or(pa.alpha_minus);
    double lift = pb.s < pa.s ? two_pi : 0.0;
    r.alpha_prime = alpha_prime_in.value_or(pb.alpha_plus) ;
    if (!alpha_prime_in) r.alpha_prime += lift;
    r.arc_small = arc_between(k, pa.s, pb.s);
    double chord_dir = std::arg(pb.z - pa.z);
    auto along_chord = [&](double ang) {
        return std::abs(std::sin(ang - chord_dir)) <= 1e-12;
    };
    cplx zeta = pa.z, zeta_p = pb.z;
    if (!k.is_disk()) {
        r.diam_small = point_set_diameter(arc_points(k, pa.s, pb.s));
    } else {
        double central = r.arc_small / k.radius();
        r.diam_small = central <= pi ? r.s : 2 * k.radius();
    }
    r.applicable = true;
    double bound = r.s * d / (w - r.s);
    r.diam_margin = bound - r.diam_small;
    r.arc_margin = 2 * bound - r.arc_small;
    if (along_chord(r.alpha) || along_chord(r.alpha_prime)) {
        r.degenerate_tangent = true;
        r.reason = "tangent coincides with the chord line";
        r.bounds_ok = r.diam_margin >= -eps && r.arc_margin >= -eps;
        return r;
    }
    double turn = r.alpha_prime - r.alpha;
    if (!(turn > 0 && turn < pi)) {
        r.applicable = false;
        r.reason = "tangent turn outside (0, pi); precedence fails";
        return r;
    }
    r.beta = pi - turn;
    cplx u = unit(r.alpha), v = -unit(r.alpha_prime), wv = zeta_p - zeta;
    double den = cross(u, v);
    r.T = zeta + (cross(wv, v) / den) * u;
    r.beta_margin = r.beta - std::asin((w - r.s) / d);
    r.triangle_margin = std::numeric_limits<double>::infinity();
    if (!k.is_disk())
        for (auto z : arc_points(k, pa.s, pb.s))
            r.triangle_margin = std::min(r.triangle_margin, triangle_margin(zeta, r.T, zeta_p, z));
    else
        r.triangle_margin = 0.0;
    r.bounds_ok = r.beta_margin >= -1e-12 && r.diam_margin >= -eps && r.arc_margin >= -eps &&
                  r.triangle_margin >= -eps;
    return r;
}

enum class TiltSide { none, minus, plus };

struct TiltedSideReport {
    bool applicable = false;
    std::string reason;
    double delta_minus = 0.0;
    double delta_plus = 0.0;
    TiltSide small_side = TiltSide::none;
    cplx D{};
    /// Smallest parameter (over the tangent interval at D) of T = t cap t'_D along the
    /// half-tangent that bounds the small sector; positive means the expected slope.
    double slope_margin = 0.0;
};

/// Chords at angles sigma -/+ phi from the inner normal sigma decide which side is small.
inline TiltedSideReport tilted_side_classification(const ConvexDomain& k, const BoundaryPoint& zeta, double sigma,
                                                   double phi) {
    TiltedSideReport r;
    auto cm = chord(k, zeta, sigma - phi), cp = chord(k, zeta, sigma + phi);
    r.delta_minus = cm.delta;
    r.delta_plus = cp.delta;
    const double eps = k.tol();
    if (std::min(r.delta_minus, r.delta_plus) <= eps) {
        r.reason = "min chord zero";
        return r;
    }
    if (std::max(r.delta_minus, r.delta_plus) >= k.width()) {
        r.reason = "max chord reaches the width";
        return r;
    }
    r.applicable = true;
    bool minus = r.delta_minus <= r.delta_plus;
    r.small_side = minus ? TiltSide::minus : TiltSide::plus;
    r.D = minus ? cm.D : cp.D;
    // Tangent at zeta, oriented toward the small sector.
    cplx tdir = minus ? unit(sigma - pi / 2) : -unit(sigma - pi / 2);
    auto bd = k.boundary_point(k.arc_param(r.D));
    r.slope_margin = std::numeric_limits<double>::infinity();
    for (double a : {bd.alpha_minus, bd.alpha_plus}) {
        cplx v = unit(a);
        double den = cross(tdir, v);
        if (std::abs(den) < 1e-14) {
            r.slope_margin = -std::numeric_limits<double>::infinity();
            continue;
        }
        double lambda = cross(r.D - zeta.z, v) / den;
        r.slope_margin = std::min(r.slope_margin, lambda);
    }
    return r;
}

struct TransfiniteEstimate {
    double lower = 0.0;  ///< d/4
    double upper = 0.0;  ///< d/2
    double fekete = 0.0; ///< geometric mean of pairwise distances of m optimized boundary points
    std::vector<double> points_s;
};

/// Fekete-point estimate of the transfinite diameter, by coordinate ascent on arc-length
/// positions of m boundary points.
inline TransfiniteEstimate transfinite_diameter_estimate(const ConvexDomain& k, int m) {
    if (m < 2) throw InvalidInput("transfinite estimate needs m >= 2");
    TransfiniteEstimate out;
    out.lower = k.diameter() / 4;
    out.upper = k.diameter() / 2;
    const double L = k.perimeter();
    std::vector<double> s(m);
    std::vector<cplx> z(m);
    for (int i = 0; i < m; ++i) {
        s[i] = L * i / m;
        z[i] = k.point_at(s[i]);
    }
    auto energy_at = [&](int i, cplx zi) {
        double e = 0.0;
        for (int j = 0; j < m; ++j)
            if (j != i) e += std::log(std::abs(zi - z[j]));
        return e;
    };
    double h = L / (4.0 * m);
    for (int sweep = 0; sweep < 5000 && h > 1e-10 * L; ++sweep) {
        bool moved = false;
        for (int i = 0; i < m; ++i) {
            double base = energy_at(i, z[i]);
            for (double step : {h, -h}) {
                cplx cand = k.point_at(s[i] + step);
                double e = energy_at(i, cand);
                if (e > base) {
                    s[i] = k.wrap(s[i] + step);
                    z[i] = cand;
                    base = e;
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) h *= 0.5;
    }
    double total = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) total += std::log(std::abs(z[i] - z[j]));
    out.fekete = std::exp(total / (0.5 * m * (m - 1)));
    out.points_s = s;
    return out;
}

}  // namespace osclab
