#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "waring/error.hpp"
#include "waring/projective.hpp"

namespace waring {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stream seed for one trial; trials drawn from (seed, index) are
/// independent of execution order, so parallel runs reproduce byte-identical
/// output.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(splitmix64(seed) ^ (trial + 1));
}

// Deterministic RNG wrapper. The integer draw uses the raw engine output
// directly (no std::uniform_int_distribution, whose mapping is
// implementation-defined), so identical seeds give identical streams on any
// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform-ish integer in [lo, hi], inclusive.
    long uniform_int(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    bool coin() { return (next_u64() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

/// Points with coordinates uniform in [-box, box], zero vectors and
/// duplicates resampled.
inline PointSet gen_uniform_box(Rng& rng, int n, std::size_t ell, long box) {
    if (box < 1) throw Error(errc::usage, "generator box must be >= 1");
    std::vector<ProjectivePoint> pts;
    std::size_t attempts = 0;
    while (pts.size() < ell) {
        if (++attempts > 1000 * (ell + 1))
            throw Error(errc::usage, "cannot sample enough distinct points from the box");
        std::vector<Int> raw(static_cast<std::size_t>(n) + 1);
        bool zero = true;
        for (auto& c : raw) {
            c = rng.uniform_int(-box, box);
            if (c != 0) zero = false;
        }
        if (zero) continue;
        ProjectivePoint p = normalize(std::move(raw));
        bool dup = false;
        for (const auto& q : pts)
            if (q == p) { dup = true; break; }
        if (!dup) pts.push_back(std::move(p));
    }
    return PointSet(n, std::move(pts));
}

namespace detail {

inline std::vector<Int> distinct_parameters(Rng& rng, std::size_t ell, long box) {
    if (box < 1 || ell > static_cast<std::size_t>(2 * box + 1))
        throw Error(errc::usage, "parameter box too small for the requested point count");
    std::vector<Int> ts;
    while (ts.size() < ell) {
        const Int t = rng.uniform_int(-box, box);
        bool dup = false;
        for (const auto& u : ts)
            if (u == t) { dup = true; break; }
        if (!dup) ts.push_back(t);
    }
    return ts;
}

}  // namespace detail

/// Points (1, t, t^2) on the smooth conic, distinct integer parameters.
inline PointSet gen_on_conic(Rng& rng, std::size_t ell, long box) {
    std::vector<ProjectivePoint> pts;
    for (const auto& t : detail::distinct_parameters(rng, ell, box))
        pts.push_back(normalize({Int(1), t, t * t}));
    return PointSet(2, std::move(pts));
}

/// Points (1, t, t^3) on the cuspidal cubic y^3 = x^2 z, distinct integer
/// parameters: easy exact rational points on a plane cubic.
inline PointSet gen_on_cubic(Rng& rng, std::size_t ell, long box) {
    std::vector<ProjectivePoint> pts;
    for (const auto& t : detail::distinct_parameters(rng, ell, box))
        pts.push_back(normalize({Int(1), t, t * t * t}));
    return PointSet(2, std::move(pts));
}

/// Uniform-box sample with the first three points forced onto a common line,
/// a planted k_1 degeneracy.
inline PointSet gen_with_collinear_triple(Rng& rng, std::size_t ell, long box) {
    if (ell < 3) return gen_uniform_box(rng, 2, ell, box);
    for (;;) {
        const PointSet base = gen_uniform_box(rng, 2, ell, box);
        std::vector<Int> third(3);
        const long alpha = rng.uniform_int(1, 3);
        const long beta = rng.uniform_int(1, 3);
        for (std::size_t c = 0; c < 3; ++c)
            third[c] = alpha * base[0].coords()[c] + beta * base[1].coords()[c];
        Int g = 0;
        for (const auto& c : third) g = boost::multiprecision::gcd(g, c);
        if (g == 0) continue;
        const ProjectivePoint p = normalize(std::move(third));
        if (p == base[0] || p == base[1]) continue;
        std::vector<ProjectivePoint> pts{base[0], base[1], p};
        for (std::size_t i = 3; i < ell; ++i) {
            if (base[i] == p) { pts.clear(); break; }
            pts.push_back(base[i]);
        }
        if (pts.size() == ell) return PointSet(2, std::move(pts));
    }
}

inline PointSet generate(const std::string& name, Rng& rng, int n, std::size_t ell, long box) {
    if (name == "uniform-box") return gen_uniform_box(rng, n, ell, box);
    if (n != 2)
        throw Error(errc::unknown_generator, "generator '" + name + "' needs n = 2");
    if (name == "on-conic") return gen_on_conic(rng, ell, box);
    if (name == "on-cubic") return gen_on_cubic(rng, ell, box);
    if (name == "with-collinear-triple") return gen_with_collinear_triple(rng, ell, box);
    throw Error(errc::unknown_generator, "unknown generator '" + name + "'");
}

}  // namespace waring
