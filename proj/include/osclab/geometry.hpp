#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace osclab {

enum class DomainKind { polygon, disk };

/// A point of the boundary together with its tangent-angle interval.
/// Angles are unwrapped so that alpha is nondecreasing in s over one period.
struct BoundaryPoint {
    double s = 0.0;
    cplx z{};
    double alpha_minus = 0.0;
    double alpha_plus = 0.0;
    double omega = 0.0;  ///< alpha_plus - alpha_minus

    /// Inner normal directions form [sigma_min, sigma_max]; outer normal is -e^{i sigma}.
    double sigma_min() const { return alpha_minus + pi / 2; }
    double sigma_max() const { return alpha_plus + pi / 2; }
};

struct Chord {
    BoundaryPoint start;
    double phi = 0.0;
    cplx D{};
    double delta = 0.0;
    bool meets_interior = false;
};

struct Box {
    double xmin, xmax, ymin, ymax;
};

/// Compact convex plane domain: a strictly convex counterclockwise polygon or a disk.
/// Boundary arc length starts at vertex 0 (polygon) or at angle 0 (disk).
class ConvexDomain {
public:
    static ConvexDomain polygon(std::vector<cplx> vertices) {
        const auto n = vertices.size();
        if (n < 3) throw InvalidDomain("polygon needs at least 3 vertices");
        for (auto v : vertices)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw InvalidDomain("polygon vertex is not finite");
        double area2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) area2 += cross(vertices[i], vertices[(i + 1) % n]);
        if (area2 < 0) throw InvalidDomain("polygon is clockwise; vertices must be counterclockwise");
        double turning = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx e0 = vertices[i] - vertices[(i + n - 1) % n];
            cplx e1 = vertices[(i + 1) % n] - vertices[i];
            if (std::abs(e0) == 0.0 || std::abs(e1) == 0.0)
                throw InvalidDomain("repeated vertex at index " + std::to_string(i));
            if (cross(e0, e1) <= 1e-12 * std::abs(e0) * std::abs(e1))
                throw InvalidDomain("polygon is not strictly convex at vertex " + std::to_string(i));
            turning += std::arg(e1 / e0);
        }
        if (std::abs(turning - two_pi) > 1e-9) throw InvalidDomain("polygon boundary is self-intersecting");
        ConvexDomain k;
        k.kind_ = DomainKind::polygon;
        k.vertices_ = std::move(vertices);
        k.init_polygon();
        return k;
    }

    static ConvexDomain disk(cplx center, double radius) {
        if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidDomain("disk radius must be positive");
        ConvexDomain k;
        k.kind_ = DomainKind::disk;
        k.center_ = center;
        k.radius_ = radius;
        k.d_ = k.w_ = 2 * radius;
        k.L_ = two_pi * radius;
        return k;
    }

    static ConvexDomain regular_polygon(int count, double circumradius = 1.0, cplx center = 0.0,
                                        double rotation = 0.0) {
        std::vector<cplx> v;
        for (int i = 0; i < count; ++i) v.push_back(center + std::polar(circumradius, rotation + two_pi * i / count));
        return polygon(std::move(v));
    }

    static ConvexDomain rectangle(double width, double height, cplx corner = 0.0) {
        return polygon({corner, corner + width, corner + cplx(width, height), corner + cplx(0, height)});
    }

    DomainKind kind() const { return kind_; }
    bool is_disk() const { return kind_ == DomainKind::disk; }
    std::span<const cplx> vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    cplx center() const { return center_; }
    double radius() const { return radius_; }
    double diameter() const { return d_; }
    double width() const { return w_; }
    double perimeter() const { return L_; }
    double tol() const { return geometry_rel_tol * d_; }

    /// Arc-length positions of the vertices (empty for the disk).
    std::span<const double> vertex_s() const {
        return std::span<const double>(cum_).first(vertices_.size());
    }
    double edge_length(std::size_t i) const { return cum_[i + 1] - cum_[i]; }
    cplx outer_normal(std::size_t i) const { return normals_[i]; }

    double wrap(double s) const {
        double r = std::fmod(s, L_);
        if (r < 0) r += L_;
        return r >= L_ ? 0.0 : r;
    }

    /// Index of the edge containing s, i.e. cum[i] <= s < cum[i+1].
    std::size_t edge_at(double s) const {
        s = wrap(s);
        auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
        auto i = static_cast<std::size_t>(std::distance(cum_.begin(), it)) - 1;
        return std::min(i, vertices_.size() - 1);
    }

    cplx point_at(double s) const {
        s = wrap(s);
        if (is_disk()) return center_ + std::polar(radius_, s / radius_);
        auto i = edge_at(s);
        double t = (s - cum_[i]) / edge_length(i);
        return vertices_[i] + t * (vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
    }

    /// Tangent-angle interval at arc length s. Vertices within tol() of s are snapped.
    BoundaryPoint boundary_point(double s) const {
        s = wrap(s);
        BoundaryPoint b;
        if (is_disk()) {
            b.s = s;
            b.z = point_at(s);
            b.alpha_minus = b.alpha_plus = s / radius_ + pi / 2;
            return b;
        }
        const auto n = vertices_.size();
        for (std::size_t i = 0; i <= n; ++i) {
            if (std::abs(s - cum_[i]) <= tol()) {
                std::size_t v = i % n;
                b.s = cum_[v];
                b.z = vertices_[v];
                b.alpha_plus = alpha_[v];
                b.alpha_minus = v == 0 ? alpha_[n - 1] - two_pi : alpha_[v - 1];
                b.omega = b.alpha_plus - b.alpha_minus;
                return b;
            }
        }
        auto i = edge_at(s);
        b.s = s;
        b.z = point_at(s);
        b.alpha_minus = b.alpha_plus = alpha_[i];
        return b;
    }

    /// Arc-length parameter of a point lying on the boundary.
    double arc_param(cplx z) const {
        if (is_disk()) return wrap(radius_ * std::arg(z - center_));
        const auto n = vertices_.size();
        double best = std::numeric_limits<double>::infinity();
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx a = vertices_[i], e = vertices_[(i + 1) % n] - a;
            double t = std::clamp(dot(z - a, e) / std::norm(e), 0.0, 1.0);
            double dist = std::abs(a + t * e - z);
            if (dist < best) {
                best = dist;
                s = cum_[i] + t * edge_length(i);
            }
        }
        return wrap(s);
    }

    /// Signed distance to the boundary, positive inside (exact for the disk,
    /// the min over edge half-planes for polygons).
    double inside_margin(cplx z) const {
        if (is_disk()) return radius_ - std::abs(z - center_);
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < vertices_.size(); ++i) m = std::min(m, -dot(normals_[i], z - vertices_[i]));
        return m;
    }

    bool contains(cplx z, double slack = -1.0) const {
        return inside_margin(z) >= -(slack < 0 ? tol() : slack);
    }

    cplx nearest_point(cplx z) const {
        if (contains(z, 0.0)) return z;
        if (is_disk()) return center_ + radius_ * (z - center_) / std::abs(z - center_);
        const auto n = vertices_.size();
        double best = std::numeric_limits<double>::infinity();
        cplx out = vertices_[0];
        for (std::size_t i = 0; i < n; ++i) {
            cplx a = vertices_[i], e = vertices_[(i + 1) % n] - a;
            double t = std::clamp(dot(z - a, e) / std::norm(e), 0.0, 1.0);
            cplx c = a + t * e;
            if (std::abs(c - z) < best) {
                best = std::abs(c - z);
                out = c;
            }
        }
        return out;
    }

    /// max over K of Re(z e^{-i gamma}).
    double support(double gamma) const {
        cplx u = unit(gamma);
        if (is_disk()) return dot(center_, u) + radius_;
        double m = -std::numeric_limits<double>::infinity();
        for (auto v : vertices_) m = std::max(m, dot(v, u));
        return m;
    }

    Box bounding_box() const {
        if (is_disk())
            return {center_.real() - radius_, center_.real() + radius_, center_.imag() - radius_,
                    center_.imag() + radius_};
        Box b{vertices_[0].real(), vertices_[0].real(), vertices_[0].imag(), vertices_[0].imag()};
        for (auto v : vertices_) {
            b.xmin = std::min(b.xmin, v.real());
            b.xmax = std::max(b.xmax, v.real());
            b.ymin = std::min(b.ymin, v.imag());
            b.ymax = std::max(b.ymax, v.imag());
        }
        return b;
    }

    cplx centroid() const {
        if (is_disk()) return center_;
        cplx c = 0.0;
        for (auto v : vertices_) c += v;
        return c / static_cast<double>(vertices_.size());
    }

    cplx sample_interior(Rng& rng) const {
        if (is_disk()) {
            double r = radius_ * std::sqrt(uniform(rng));
            return center_ + std::polar(r, uniform(rng, 0.0, two_pi));
        }
        auto b = bounding_box();
        for (;;) {
            cplx z(uniform(rng, b.xmin, b.xmax), uniform(rng, b.ymin, b.ymax));
            if (contains(z, 0.0)) return z;
        }
    }

    /// Parameter interval {t : z0 + t u in K}, or nullopt when the line misses K.
    std::optional<std::pair<double, double>> line_interval(cplx z0, cplx u) const {
        const double eps = tol();
        if (is_disk()) {
            cplx w = z0 - center_;
            double b = dot(u, w) / std::norm(u);
            double c = (std::norm(w) - radius_ * radius_) / std::norm(u);
            double disc = b * b - c;
            if (disc < -eps * eps) return std::nullopt;
            double r = std::sqrt(std::max(0.0, disc));
            return std::pair{-b - r, -b + r};
        }
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            double a = dot(normals_[i], z0 - vertices_[i]);
            double b = dot(normals_[i], u);
            if (std::abs(b) < 1e-14 * std::abs(u)) {
                if (a > eps) return std::nullopt;
                continue;
            }
            double t = -a / b;
            if (b > 0)
                hi = std::min(hi, t);
            else
                lo = std::max(lo, t);
        }
        if (lo > hi) {
            if ((lo - hi) * std::abs(u) > eps) return std::nullopt;
            double m = 0.5 * (lo + hi);
            return std::pair{m, m};
        }
        return std::pair{lo, hi};
    }

private:
    void init_polygon() {
        const auto n = vertices_.size();
        cum_.assign(n + 1, 0.0);
        alpha_.assign(n, 0.0);
        normals_.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            cplx e = vertices_[(i + 1) % n] - vertices_[i];
            cum_[i + 1] = cum_[i] + std::abs(e);
            normals_[i] = -cplx(0, 1) * e / std::abs(e);
            alpha_[i] = i == 0 ? std::arg(e)
                               : alpha_[i - 1] + std::arg(e / (vertices_[i] - vertices_[i - 1]));
        }
        L_ = cum_[n];
        compute_calipers();
    }

    // Rotating calipers: for each edge the farthest vertex gives the slab width;
    // antipodal vertex pairs give the diameter.
    void compute_calipers() {
        const auto n = vertices_.size();
        auto height = [&](std::size_t i, std::size_t j) { return -dot(normals_[i], vertices_[j] - vertices_[i]); };
        std::size_t j = 1;
        w_ = std::numeric_limits<double>::infinity();
        d_ = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            while (height(i, (j + 1) % n) > height(i, j)) j = (j + 1) % n;
            w_ = std::min(w_, height(i, j));
            d_ = std::max({d_, std::abs(vertices_[i] - vertices_[j]), std::abs(vertices_[(i + 1) % n] - vertices_[j])});
        }
    }

    DomainKind kind_ = DomainKind::polygon;
    std::vector<cplx> vertices_;
    cplx center_{};
    double radius_ = 0.0;
    double d_ = 0.0, w_ = 0.0, L_ = 0.0;
    std::vector<double> cum_;
    std::vector<double> alpha_;
    std::vector<cplx> normals_;
};

inline double diameter(const ConvexDomain& k) { return k.diameter(); }
inline double width(const ConvexDomain& k) { return k.width(); }

inline BoundaryPoint tangent_interval(const ConvexDomain& k, double s) { return k.boundary_point(s); }

/// Counterclockwise arc length from a to b.
inline double arc_between(const ConvexDomain& k, double a, double b) {
    double l = k.wrap(b) - k.wrap(a);
    return l < 0 ? l + k.perimeter() : l;
}

/// Total tangent-angle variation along the closed counterclockwise arc from a to b,
/// including the jumps at both endpoints.
inline double tangent_variation(const ConvexDomain& k, double a, double b) {
    auto pa = k.boundary_point(a), pb = k.boundary_point(b);
    double hi = pb.alpha_plus + (pb.s < pa.s ? two_pi : 0.0);
    return hi - pa.alpha_minus;
}

/// Inner normal directions sampled across the normal cone; one direction at smooth points.
inline std::vector<double> normal_fan(const BoundaryPoint& b, int count) {
    if (b.omega <= 0.0 || count <= 1) return {0.5 * (b.sigma_min() + b.sigma_max())};
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(b.sigma_min() + b.omega * i / (count - 1));
    return out;
}

/// Intersection of K with the line zeta + e^{i phi} R.
inline Chord chord(const ConvexDomain& k, const BoundaryPoint& zeta, double phi) {
    Chord c;
    c.start = zeta;
    c.phi = phi;
    c.D = zeta.z;
    cplx u = unit(phi);
    auto iv = k.line_interval(zeta.z, u);
    if (!iv) return c;
    auto [lo, hi] = *iv;
    c.delta = std::max(0.0, hi - lo);
    double t = std::abs(hi) >= std::abs(lo) ? hi : lo;
    c.D = zeta.z + t * u;
    if (c.delta > k.tol()) {
        cplx mid = zeta.z + 0.5 * (lo + hi) * u;
        c.meets_interior = k.inside_margin(mid) > k.tol();
    }
    return c;
}

inline Chord chord(const ConvexDomain& k, double s, double phi) { return chord(k, k.boundary_point(s), phi); }

namespace detail {

template <class F>
double golden_max(F&& f, double a, double b, double tol, double* arg = nullptr) {
    const double g = (std::sqrt(5.0) - 1) / 2;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = f(x1);
        }
    }
    double x = f1 > f2 ? x1 : x2;
    if (arg) *arg = x;
    return std::max(f1, f2);
}

}  // namespace detail

/// Longest normal chord at a boundary point, maximized over the normal cone.
inline double max_normal_chord(const ConvexDomain& k, const BoundaryPoint& b) {
    auto len = [&](double sigma) { return chord(k, b, sigma).delta; };
    if (b.omega <= 0.0) return len(b.sigma_min());
    constexpr int coarse = 32;
    double best = -1.0, best_x = b.sigma_min();
    for (int i = 0; i <= coarse; ++i) {
        double x = b.sigma_min() + b.omega * i / coarse;
        double v = len(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    double step = b.omega / coarse;
    double lo = std::max(b.sigma_min(), best_x - step), hi = std::min(b.sigma_max(), best_x + step);
    return std::max(best, detail::golden_max(len, lo, hi, 1e-10));
}

/// Depth: the largest h such that every boundary point has a normal line meeting K in length >= h.
/// Along a polygon edge the normal chord is piecewise linear with breakpoints where the normal
/// line passes a vertex, so the edge minimum is found among those breakpoints.
inline double depth(const ConvexDomain& k) {
    if (k.is_disk()) return 2 * k.radius();
    auto verts = k.vertices();
    const auto n = verts.size();
    double h = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double s0 = k.vertex_s()[i], len = k.edge_length(i);
        cplx a = verts[i], e = verts[(i + 1) % n] - a;
        double sigma = std::arg(e) + pi / 2;
        std::vector<double> ts{0.0, 1.0};
        for (auto v : verts) {
            double t = dot(v - a, e) / std::norm(e);
            if (t > 0.0 && t < 1.0) ts.push_back(t);
        }
        for (double t : ts) {
            BoundaryPoint b;
            b.s = s0 + t * len;
            b.z = a + t * e;
            h = std::min(h, chord(k, b, sigma).delta);
        }
        h = std::min(h, max_normal_chord(k, k.boundary_point(s0)));
    }
    return h <= k.tol() ? 0.0 : h;
}

}  // namespace osclab
