#pragma once

// Shared fixtures and test-side oracles. The oracles here deliberately take
// different computational routes than the library paths they cross-check:
// circuit search via the division-based kernel instead of the fraction-free
// level scan, Cayley-Bacharach straight from the definition instead of the
// Hilbert-function comparison.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "waring/cayley_bacharach.hpp"
#include "waring/matrix.hpp"
#include "waring/projective.hpp"
#include "waring/random.hpp"

namespace support {

using waring::Int;
using waring::Matrix;
using waring::PointSet;
using waring::Rational;
using waring::Rng;

// --- fixtures -------------------------------------------------------------

/// The eleven ternary points of the septic worked example, as printed.
inline std::vector<std::vector<Int>> septic11_raw() {
    return {{1, 0, 0}, {0, 1, 0},  {0, 0, 1},  {1, 1, 1},  {1, -1, 2}, {1, 3, -1},
            {1, 2, 3}, {2, -1, 1}, {-2, -1, 3}, {-1, 3, 4}, {3, -1, 4}};
}

inline PointSet septic11() { return PointSet::from_raw(2, septic11_raw()); }

/// Five points on the line z = 0 plus one point off it.
inline PointSet five_on_line_plus_one() {
    return PointSet::from_raw(
        2, {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}, {0, 0, 1}});
}

/// Six points in general position: no conic through all six.
inline PointSet six_general() {
    return PointSet::from_raw(
        2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {1, -1, 2}});
}

/// Six points on the smooth conic (1, t, t^2).
inline PointSet six_on_conic() {
    std::vector<std::vector<Int>> raw;
    for (int t = 0; t < 6; ++t) raw.push_back({Int(1), Int(t), Int(t) * t});
    return PointSet::from_raw(2, raw);
}

/// Points (1, t, t^3) on the cuspidal cubic y^3 = x^2 z.
inline PointSet on_cuspidal_cubic(int t_first, int t_last) {
    std::vector<std::vector<Int>> raw;
    for (int t = t_first; t <= t_last; ++t)
        raw.push_back({Int(1), Int(t), Int(t) * t * t});
    return PointSet::from_raw(2, raw);
}

/// The 3 x 3 affine grid: a complete intersection of two cubics.
inline PointSet grid3x3() {
    std::vector<std::vector<Int>> raw;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) raw.push_back({Int(a), Int(b), Int(1)});
    return PointSet::from_raw(2, raw);
}

/// Seven points with k_1 = 3 and k_2 = 6, the quintic configuration.
inline PointSet quintic7() {
    return PointSet::from_raw(
        2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {2, -1, 1}, {1, -1, 2}});
}

// --- random data ----------------------------------------------------------

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform_int(lo, hi));
    return m;
}

/// Product of two generic factors: rank at most r.
inline Matrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
    const Matrix a = random_matrix(rng, rows, r, -3, 3);
    const Matrix b = random_matrix(rng, r, cols, -3, 3);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < r; ++k) acc += a(i, k) * b(k, j);
            m(i, j) = acc;
        }
    return m;
}

/// Unimodular: unit lower-triangular times unit upper-triangular.
inline Matrix random_invertible(Rng& rng, std::size_t size) {
    Matrix l(size, size), u(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        l(i, i) = 1;
        u(i, i) = 1;
        for (std::size_t j = 0; j < i; ++j) l(i, j) = Rational(rng.uniform_int(-2, 2));
        for (std::size_t j = i + 1; j < size; ++j) u(i, j) = Rational(rng.uniform_int(-2, 2));
    }
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < size; ++k) acc += l(i, k) * u(k, j);
            m(i, j) = acc;
        }
    return m;
}

inline Matrix matrix_product(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            m(i, j) = acc;
        }
    return m;
}

/// Applies an invertible coordinate change of P^n to every point.
inline PointSet apply_coordinate_change(const PointSet& z, const Matrix& m) {
    std::vector<std::vector<Int>> raw;
    for (const auto& p : z) {
        std::vector<Rational> image(m.rows(), Rational(0));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                image[i] += m(i, j) * Rational(p.coords()[j]);
        const auto cleared = waring::primitive_scale(image);
        std::vector<Int> row;
        for (const auto& c : cleared) row.push_back(waring::numerator_of(c));
        raw.push_back(std::move(row));
    }
    return PointSet::from_raw(z.ambient_dim(), raw);
}

/// Random distinct points of P^2 in a small box.
inline PointSet random_plane_points(Rng& rng, std::size_t ell, long box = 9) {
    return waring::gen_uniform_box(rng, 2, ell, box);
}

// --- independent oracles ---------------------------------------------------

/// Rank through the division-based reduced echelon form (via the kernel),
/// not the fraction-free elimination.
inline std::size_t rref_rank(const Matrix& m) {
    return m.cols() - waring::kernel_basis(m).size();
}

/// Kruskal rank as smallest-circuit search: subsets scanned by size with the
/// division-based rank; the first dependent subset is a smallest circuit C,
/// and k = |C| - 1. No early exits.
inline std::size_t circuit_oracle_kruskal(const PointSet& a, int d) {
    const auto rows = waring::evaluation_rows(a, d);
    const std::size_t ell = a.size();
    const std::size_t ncols = rows.front().size();
    const std::size_t kmax = std::min(ell, ncols);
    for (std::size_t s = 1; s <= kmax; ++s) {
        auto idx = waring::detail::first_combination(s);
        do {
            Matrix sub(s, ncols);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < ncols; ++j) sub(i, j) = rows[idx[i]][j];
            if (rref_rank(sub) < s) return s - 1;
        } while (waring::detail::next_combination(idx, ell));
    }
    return kmax;
}

/// Cayley-Bacharach straight from the definition: for each P, compute the
/// degree-d forms vanishing on Z minus P and evaluate every basis form at P.
inline std::pair<bool, std::optional<std::size_t>> brute_force_cb(const PointSet& z, int d) {
    const auto rows = waring::evaluation_rows(z, d);
    for (std::size_t i = 0; i < z.size(); ++i) {
        Matrix rest(z.size() - 1, rows.front().size());
        std::size_t r = 0;
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (j == i) continue;
            for (std::size_t c = 0; c < rows[j].size(); ++c) rest(r, c) = rows[j][c];
            ++r;
        }
        for (const auto& form : waring::kernel_basis(rest)) {
            Rational at_p = 0;
            for (std::size_t c = 0; c < form.size(); ++c) at_p += form[c] * rows[i][c];
            if (at_p != 0) return {false, i};
        }
    }
    return {true, std::nullopt};
}

}  // namespace support
