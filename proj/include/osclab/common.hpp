#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace osclab {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Exponent value standing for the sup norm.
inline constexpr double q_inf = std::numeric_limits<double>::infinity();

/// Relative geometric tolerance, scaled by the diameter at use sites.
inline constexpr double geometry_rel_tol = 1e-12;
/// Distance (relative to the diameter) below which a point counts as a root.
inline constexpr double singular_rel_tol = 1e-14;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDomain : Error {
    using Error::Error;
};
struct InvalidInput : Error {
    using Error::Error;
};
struct SingularPoint : Error {
    SingularPoint() : Error("evaluation point coincides with a root") {}
};
struct ZeroNorm : Error {
    ZeroNorm() : Error("norm of p vanishes") {}
};
struct NoCutPoint : Error {
    using Error::Error;
};
struct FamilyTooLarge : Error {
    using Error::Error;
};
struct BudgetTooSmall : Error {
    using Error::Error;
};

inline double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); }
inline cplx unit(double angle) { return std::polar(1.0, angle); }

/// Reduce an angle to [0, 2π).
inline double wrap_angle(double a) {
    double r = std::fmod(a, two_pi);
    return r < 0 ? r + two_pi : r;
}

inline bool is_infinite_q(double q) { return std::isinf(q); }

/// SplitMix64 step; used to derive independent per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ (index * 0xd1342543de82ef95ULL + 1));
}

using Rng = std::mt19937_64;

inline Rng trial_rng(std::uint64_t master, std::uint64_t index) { return Rng(trial_seed(master, index)); }

inline double uniform(Rng& rng, double a = 0.0, double b = 1.0) {
    return std::uniform_real_distribution<double>(a, b)(rng);
}

}  // namespace osclab
