#pragma once

#include <span>
#include <vector>

#include "common.hpp"
#include "geometry.hpp"

namespace osclab {

/// p(z) = lead * prod (z - z_j), stored by its roots.
class RootPolynomial {
public:
    RootPolynomial() = default;
    explicit RootPolynomial(std::vector<cplx> roots, cplx lead = 1.0) : lead_(lead), roots_(std::move(roots)) {
        if (lead_ == cplx(0.0)) throw InvalidInput("leading coefficient must be nonzero");
    }

    /// z^n shifted to the center c.
    static RootPolynomial power(int n, cplx c = 0.0) { return RootPolynomial(std::vector<cplx>(n, c)); }

    int degree() const { return static_cast<int>(roots_.size()); }
    cplx lead() const { return lead_; }
    std::span<const cplx> roots() const { return roots_; }

    bool roots_in(const ConvexDomain& k) const {
        for (auto z : roots_)
            if (!k.contains(z)) return false;
        return true;
    }

    double min_root_distance(cplx z) const {
        double m = std::numeric_limits<double>::infinity();
        for (auto r : roots_) m = std::min(m, std::abs(z - r));
        return m;
    }

private:
    cplx lead_ = 1.0;
    std::vector<cplx> roots_;
};

/// p(z) = exp(log_abs) * e^{i arg}; the split keeps degree-10^4 products finite.
struct LogValue {
    double log_abs = 0.0;
    double arg = 0.0;
    cplx value() const { return std::polar(std::exp(log_abs), arg); }
};

inline LogValue log_evaluate(const RootPolynomial& p, cplx z) {
    LogValue v{std::log(std::abs(p.lead())), std::arg(p.lead())};
    for (auto r : p.roots()) {
        cplx f = z - r;
        v.log_abs += std::log(std::abs(f));
        v.arg += std::arg(f);
    }
    v.arg = std::remainder(v.arg, two_pi);
    return v;
}

inline cplx evaluate(const RootPolynomial& p, cplx z) { return log_evaluate(p, z).value(); }

inline double log_abs(const RootPolynomial& p, cplx z) {
    double s = std::log(std::abs(p.lead()));
    for (auto r : p.roots()) s += std::log(std::abs(z - r));
    return s;
}

/// sum 1/(z - z_j). Throws SingularPoint within scale * 1e-14 of a root.
inline cplx log_derivative(const RootPolynomial& p, cplx z, double scale = 1.0) {
    if (p.min_root_distance(z) < singular_rel_tol * scale) throw SingularPoint();
    cplx s = 0.0;
    for (auto r : p.roots()) s += 1.0 / (z - r);
    return s;
}

/// log |p'(z)| from the factored form. With z_k the nearest root,
///   p'(z) = lead * prod_{j != k} (z - z_j) * (1 + (z - z_k) sum_{j != k} 1/(z - z_j)),
/// which stays accurate at and near roots, including multiple ones.
inline double log_abs_derivative(const RootPolynomial& p, cplx z) {
    auto roots = p.roots();
    if (roots.empty()) return -std::numeric_limits<double>::infinity();
    std::size_t k = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
        double dist = std::abs(z - roots[j]);
        if (dist < best) {
            best = dist;
            k = j;
        }
    }
    double s = std::log(std::abs(p.lead()));
    cplx tail = 0.0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j == k) continue;
        cplx f = z - roots[j];
        if (f == cplx(0.0)) return -std::numeric_limits<double>::infinity();
        s += std::log(std::abs(f));
        tail += 1.0 / f;
    }
    return s + std::log(std::abs(1.0 + (z - roots[k]) * tail));
}

/// Coefficients in ascending order.
inline std::vector<cplx> expand_coefficients(const RootPolynomial& p) {
    std::vector<cplx> c{p.lead()};
    for (auto r : p.roots()) {
        std::vector<cplx> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

inline std::vector<cplx> differentiate(std::span<const cplx> c) {
    if (c.size() <= 1) return {0.0};
    std::vector<cplx> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    return d;
}

inline cplx horner(std::span<const cplx> c, cplx z) {
    cplx v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
    return v;
}

}  // namespace osclab
