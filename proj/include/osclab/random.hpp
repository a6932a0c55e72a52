#pragma once

#include <algorithm>
#include <vector>

#include "geometry.hpp"
#include "polynomial.hpp"

namespace osclab {

/// Convex polygon with `count` vertices on a circle (sorted random angles with a minimum
/// gap), pushed through a random orientation-preserving affine map.
inline ConvexDomain random_polygon(Rng& rng, int count, double max_stretch = 3.0) {
    if (count < 3) throw InvalidInput("random polygon needs at least 3 vertices");
    const double min_gap = 0.25 * two_pi / count;
    std::vector<double> ang(count);
    for (;;) {
        for (auto& a : ang) a = uniform(rng, 0.0, two_pi);
        std::sort(ang.begin(), ang.end());
        bool ok = two_pi - (ang.back() - ang.front()) >= min_gap;
        for (int i = 1; ok && i < count; ++i) ok = ang[i] - ang[i - 1] >= min_gap;
        if (ok) break;
    }
    double stretch = uniform(rng, 1.0, max_stretch);
    double rot = uniform(rng, 0.0, two_pi), shear = uniform(rng, -0.5, 0.5);
    cplx shift(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    std::vector<cplx> v;
    for (double a : ang) {
        double x = std::cos(a) * stretch, y = std::sin(a);
        x += shear * y;
        v.push_back(shift + cplx(x, y) * unit(rot));
    }
    return ConvexDomain::polygon(std::move(v));
}

inline ConvexDomain random_polygon(Rng& rng) {
    std::uniform_int_distribution<int> count(3, 9);
    return random_polygon(rng, count(rng));
}

inline double random_boundary_s(const ConvexDomain& k, Rng& rng) { return uniform(rng, 0.0, k.perimeter()); }

/// Vertex or uniform boundary parameter, each with probability 1/2 for polygons.
inline double random_boundary_s_with_vertices(const ConvexDomain& k, Rng& rng) {
    if (k.is_disk() || uniform(rng) < 0.5) return random_boundary_s(k, rng);
    std::uniform_int_distribution<std::size_t> pick(0, k.vertex_count() - 1);
    return k.vertex_s()[pick(rng)];
}

/// n roots in K drawn from a mixture: uniform interior, on the boundary, and tight clusters.
inline std::vector<cplx> random_roots_in(const ConvexDomain& k, int n, Rng& rng) {
    std::vector<cplx> roots;
    roots.reserve(n);
    while (static_cast<int>(roots.size()) < n) {
        double u = uniform(rng);
        if (u < 0.5) {
            roots.push_back(k.sample_interior(rng));
        } else if (u < 0.75) {
            roots.push_back(k.point_at(random_boundary_s(k, rng)));
        } else {
            cplx c = k.sample_interior(rng);
            double rad = k.diameter() * std::pow(10.0, -uniform(rng, 1.0, 3.0));
            int m = std::min(n - static_cast<int>(roots.size()), 1 + static_cast<int>(uniform(rng, 0.0, 6.0)));
            for (int j = 0; j < m; ++j)
                roots.push_back(k.nearest_point(c + rad * cplx(uniform(rng, -1, 1), uniform(rng, -1, 1))));
        }
    }
    return roots;
}

/// Roots anywhere in a box three times the size of K.
inline std::vector<cplx> random_roots_unrestricted(const ConvexDomain& k, int n, Rng& rng) {
    auto b = k.bounding_box();
    double dx = b.xmax - b.xmin, dy = b.ymax - b.ymin;
    std::vector<cplx> roots(n);
    for (auto& z : roots) z = cplx(uniform(rng, b.xmin - dx, b.xmax + dx), uniform(rng, b.ymin - dy, b.ymax + dy));
    return roots;
}

inline cplx random_lead(Rng& rng) { return std::polar(std::exp(uniform(rng, -3.0, 3.0)), uniform(rng, 0.0, two_pi)); }

inline RootPolynomial random_polynomial_in(const ConvexDomain& k, int n, Rng& rng, bool monic = false) {
    return RootPolynomial(random_roots_in(k, n, rng), monic ? cplx(1.0) : random_lead(rng));
}

}  // namespace osclab
