#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "waring/error.hpp"
#include "waring/matrix.hpp"
#include "waring/monomial.hpp"
#include "waring/projective.hpp"

namespace waring {

// A degree-d form in n+1 variables as its exact coefficient vector over the
// graded-lex monomial basis. Coefficients are literal polynomial
// coefficients: synthesize bakes the multinomial factors in, so coeffs
// directly represent sum_i a_i L_i^d expanded.
struct SymmetricTensor {
    int n = 0;
    int d = 0;
    std::vector<Rational> coeffs;
};

struct WeightedDecomposition {
    PointSet points;
    std::vector<Rational> weights;
};

/// Ingests a weighted decomposition given by raw (not necessarily canonical)
/// representatives. Points are canonicalized; each weight is rescaled by
/// lambda^d, where raw = lambda * canonical, so the represented tensor
/// sum_i a_i L_i^d is unchanged. A sign flip of a representative in odd
/// degree, for example, negates its weight.
inline WeightedDecomposition weighted_decomposition_from_raw(
    int n, const std::vector<std::vector<Rational>>& raw, std::vector<Rational> weights,
    int d) {
    if (raw.size() != weights.size())
        throw Error(errc::dimension_mismatch, "weights do not match points");
    if (d < 1) throw Error(errc::degree_range, "decomposition degree must be >= 1");
    std::vector<ProjectivePoint> pts;
    pts.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::vector<Rational> cleared = primitive_scale(raw[i]);
        std::vector<Int> coords;
        coords.reserve(cleared.size());
        for (const auto& c : cleared) coords.push_back(numerator_of(c));
        ProjectivePoint p = normalize(std::move(coords));
        std::size_t j0 = 0;
        while (j0 < raw[i].size() && raw[i][j0] == 0) ++j0;
        const Rational lambda = raw[i][j0] / Rational(p.coords()[j0]);
        for (int t = 0; t < d; ++t) weights[i] *= lambda;
        pts.push_back(std::move(p));
    }
    return {PointSet(n, std::move(pts)), std::move(weights)};
}

/// Coordinates of the same tensor in the scaled basis where v_d(P) has plain
/// monomial coordinates P^e: entry(e) = coeff(e) / multinomial(d; e). This
/// is the convention of the evaluation matrix, of the catalecticant pairing,
/// and of printed tables of symmetric-tensor entries.
inline std::vector<Rational> symmetric_entries(const SymmetricTensor& t) {
    const MonomialBasis basis = MonomialBasis::make(t.n, t.d);
    if (t.coeffs.size() != basis.size())
        throw Error(errc::dimension_mismatch, "tensor coefficient vector has wrong length");
    std::vector<Rational> entries;
    entries.reserve(t.coeffs.size());
    for (std::size_t i = 0; i < t.coeffs.size(); ++i)
        entries.push_back(t.coeffs[i] / Rational(multinomial(t.d, basis.exponents[i])));
    return entries;
}

/// sum_i a_i L_i^d as an exact coefficient vector:
/// coeff(e) = sum_i a_i * multinomial(d; e) * P_i^e.
inline SymmetricTensor synthesize(const WeightedDecomposition& dec, int d) {
    if (d < 1) throw Error(errc::degree_range, "synthesize degree must be >= 1");
    if (dec.weights.size() != dec.points.size())
        throw Error(errc::dimension_mismatch, "weights do not match points");
    for (const auto& w : dec.weights)
        if (w == 0) throw Error(errc::zero_weight, "synthesize: zero weight");
    const int n = dec.points.ambient_dim();
    const MonomialBasis basis = MonomialBasis::make(n, d);
    SymmetricTensor t{n, d, std::vector<Rational>(basis.size(), Rational(0))};
    for (std::size_t i = 0; i < dec.points.size(); ++i) {
        const auto& coords = dec.points[i].coords();
        for (std::size_t j = 0; j < basis.size(); ++j)
            t.coeffs[j] += dec.weights[i] * Rational(multinomial(d, basis.exponents[j]) *
                                                     monomial_value(coords, basis.exponents[j]));
    }
    return t;
}

/// Exact evaluation of the form at a point.
inline Rational evaluate(const SymmetricTensor& t, const std::vector<Rational>& point) {
    if (point.size() != static_cast<std::size_t>(t.n) + 1)
        throw Error(errc::dimension_mismatch, "evaluate: wrong point length");
    const MonomialBasis basis = MonomialBasis::make(t.n, t.d);
    Rational v = 0;
    for (std::size_t j = 0; j < basis.size(); ++j)
        v += t.coeffs[j] * monomial_value(point, basis.exponents[j]);
    return v;
}

/// Exact weights expressing T in <v_d(A)>, or nullopt when T is not in the
/// span. In plain monomial coordinates the columns of the system are the
/// evaluation rows of A, so this solves the transposed evaluation system.
/// The weights are unique when v_d(A) is linearly independent.
inline std::optional<std::vector<Rational>> membership(const SymmetricTensor& t,
                                                       const PointSet& a) {
    if (a.ambient_dim() != t.n)
        throw Error(errc::dimension_mismatch, "membership: ambient dimensions differ");
    const std::vector<Rational> entries = symmetric_entries(t);
    const auto rows = evaluation_rows(a, t.d);
    Matrix system(entries.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < entries.size(); ++j) system(j, i) = rows[i][j];
    return solve(system, entries);
}

/// True iff A is a minimal (non-redundant) decomposition of T: v_d(A) must
/// be linearly independent and the resulting unique weights all nonzero;
/// equivalently no proper subset of A spans T.
inline bool is_minimal(const SymmetricTensor& t, const PointSet& a) {
    const auto weights = membership(t, a);
    if (!weights) throw Error(errc::not_in_span, "is_minimal: T is not spanned by v_d(A)");
    if (detail::bareiss_rank(evaluation_rows(a, t.d)) != a.size()) return false;
    for (const auto& w : *weights)
        if (w == 0) return false;
    return true;
}

/// Rank of the catalecticant Cat_{s,d-s}(T): the contraction pairing between
/// degree-s and degree-(d-s) monomials, entry(u, v) = entry(u + v) in the
/// scaled coordinates. Normalized so Cat(L^d) has rank exactly 1; the rank
/// is a lower bound for the Waring rank of T.
inline std::size_t catalecticant_rank(const SymmetricTensor& t, int s) {
    if (s < 1 || s > t.d - 1)
        throw Error(errc::degree_range, "catalecticant_rank needs 1 <= s <= d-1");
    const std::vector<Rational> entries = symmetric_entries(t);
    const MonomialBasis full = MonomialBasis::make(t.n, t.d);
    const MonomialBasis rows_basis = MonomialBasis::make(t.n, s);
    const MonomialBasis cols_basis = MonomialBasis::make(t.n, t.d - s);
    Matrix cat(rows_basis.size(), cols_basis.size());
    for (std::size_t i = 0; i < rows_basis.size(); ++i)
        for (std::size_t j = 0; j < cols_basis.size(); ++j) {
            std::vector<int> e(rows_basis.exponents[i]);
            for (std::size_t v = 0; v < e.size(); ++v) e[v] += cols_basis.exponents[j][v];
            cat(i, j) = entries[full.index_of(e)];
        }
    return rank(cat);
}

}  // namespace waring
