#pragma once

#include <cstddef>
#include <vector>

#include "waring/error.hpp"
#include "waring/matrix.hpp"
#include "waring/projective.hpp"

namespace waring {

// Hilbert function table of one finite point set over 0..d_max:
//   h(j)  = rank of the degree-j evaluation map,
//   dh(j) = h(j) - h(j-1) with h(-1) = 0,
//   h1(j) = l(Z) - h(j).
struct HilbertProfile {
    std::size_t set_size = 0;
    std::vector<std::size_t> h;
    std::vector<std::size_t> dh;
    std::vector<std::size_t> h1;

    int d_max() const { return static_cast<int>(h.size()) - 1; }
};

/// h_Z(d): the rank of the degree-d evaluation map of Z.
inline std::size_t hilbert_function(const PointSet& z, int d) {
    if (z.empty()) throw Error(errc::empty_set, "hilbert_function of empty set");
    if (d < 0) throw Error(errc::degree_range, "hilbert_function degree must be >= 0");
    return detail::bareiss_rank(evaluation_rows(z, d));
}

/// Full table through d_max; d_max < 0 selects l(Z)-1, beyond which the
/// Hilbert function of a finite set has provably stabilized at l(Z).
inline HilbertProfile hilbert_profile(const PointSet& z, int d_max = -1) {
    if (z.empty()) throw Error(errc::empty_set, "hilbert_profile of empty set");
    if (d_max < 0) d_max = static_cast<int>(z.size()) - 1;
    HilbertProfile profile;
    profile.set_size = z.size();
    for (int j = 0; j <= d_max; ++j) {
        const std::size_t hj =
            (j > 0 && profile.h.back() == z.size()) ? z.size() : hilbert_function(z, j);
        profile.h.push_back(hj);
        profile.dh.push_back(hj - (j == 0 ? 0 : profile.h[static_cast<std::size_t>(j) - 1]));
        profile.h1.push_back(z.size() - hj);
    }
    return profile;
}

/// Projective dimension of the span of v_d(Z): h_Z(d) - 1.
inline long span_dim(const PointSet& z, int d) {
    return static_cast<long>(hilbert_function(z, d)) - 1;
}

/// Direct route to dim(<v_d(A)> cap <v_d(B)>): Grassmann on explicit spans,
/// dim<A> + dim<B> - dim<A stacked with B>, each via one exact rank. Serves
/// as the independent cross-check for grassmann_intersection_dim.
inline long span_intersection_dim(const PointSet& a, const PointSet& b, int d) {
    auto rows_a = evaluation_rows(a, d);
    const auto rows_b = evaluation_rows(b, d);
    const long ha = static_cast<long>(detail::bareiss_rank(rows_a));
    const long hb = static_cast<long>(detail::bareiss_rank(rows_b));
    rows_a.insert(rows_a.end(), rows_b.begin(), rows_b.end());
    const long hu = static_cast<long>(detail::bareiss_rank(std::move(rows_a)));
    return ha + hb - hu - 1;
}

/// dim(<v_d(A)> cap <v_d(B)>) for disjoint A, B via the h^1 bookkeeping of
/// the union: h1_{A u B}(d) - 1.
///
/// The identity requires each of v_d(A), v_d(B) to be linearly independent
/// (true in every intended use: minimal decompositions). In that regime the
/// direct span computation is run as an internal oracle; in general,
/// dim cap = h1_Z - h1_A - h1_B - 1.
inline long grassmann_intersection_dim(const PointSet& a, const PointSet& b, int d) {
    if (a.empty() || b.empty())
        throw Error(errc::empty_set, "grassmann_intersection_dim needs nonempty sets");
    for (const auto& p : b)
        if (a.contains(p))
            throw Error(errc::not_disjoint,
                        "grassmann_intersection_dim: sets share " + p.str());
    const PointSet z = a.disjoint_union(b);
    const std::size_t hz = hilbert_function(z, d);
    const long result = static_cast<long>(z.size()) - static_cast<long>(hz) - 1;
    const std::size_t ha = hilbert_function(a, d);
    const std::size_t hb = hilbert_function(b, d);
    if (ha == a.size() && hb == b.size()) {
        if (result != span_intersection_dim(a, b, d))
            throw std::logic_error("grassmann_intersection_dim: h^1 route disagrees "
                                   "with direct span computation");
    }
    return result;
}

}  // namespace waring
