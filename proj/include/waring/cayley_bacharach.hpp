#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "waring/error.hpp"
#include "waring/hilbert.hpp"
#include "waring/matrix.hpp"
#include "waring/projective.hpp"

namespace waring {

// Outcome of a CB(d) check. On failure the first separating point (lowest
// index) is reported together with an explicit degree-d form vanishing on
// Z minus that point but not at it.
struct CBReport {
    int degree = 0;
    bool holds = false;
    std::optional<std::size_t> separating_point;
    std::optional<std::vector<Rational>> separating_form;
};

/// CB(d): every degree-d form vanishing at Z minus one point also vanishes
/// at that point. Checked through the Hilbert function: the kernel of the
/// evaluation map grows when P is dropped iff h_{Z\P}(d) < h_Z(d). The
/// separating form is the first canonical kernel-basis vector of Z\{P} that
/// does not vanish at P.
inline CBReport cb_check(const PointSet& z, int d) {
    if (z.empty()) throw Error(errc::empty_set, "cb_check of empty set");
    if (d < 0) throw Error(errc::degree_range, "cb_check degree must be >= 0");
    const auto rows = evaluation_rows(z, d);
    const std::size_t hz = detail::bareiss_rank(rows);
    for (std::size_t i = 0; i < z.size(); ++i) {
        std::vector<std::vector<Int>> rest;
        rest.reserve(z.size() - 1);
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i) rest.push_back(rows[j]);
        if (detail::bareiss_rank(rest) == hz) continue;

        Matrix rest_matrix(rest.size(), rows.front().size());
        for (std::size_t r = 0; r < rest.size(); ++r)
            for (std::size_t c = 0; c < rest[r].size(); ++c) rest_matrix(r, c) = rest[r][c];
        for (const auto& form : kernel_basis(rest_matrix)) {
            Rational at_p = 0;
            for (std::size_t c = 0; c < form.size(); ++c) at_p += form[c] * rows[i][c];
            if (at_p != 0) return {d, false, i, form};
        }
        // Unreachable: a strict kernel inclusion yields a basis vector not
        // vanishing at P.
        throw std::logic_error("cb_check: kernel grew but no separating form found");
    }
    return {d, true, std::nullopt, std::nullopt};
}

/// Largest d with CB(d); -1 if even CB(0) fails. CB degrees are down-closed,
/// so the scan walks upward and stops at the first failure; for a finite set
/// the failure arrives by d = l(Z) - 1 at the latest.
inline int cb_max_degree(const PointSet& z) {
    if (z.size() < 2) throw Error(errc::precondition, "cb_max_degree needs l(Z) >= 2");
    const int limit = static_cast<int>(z.size()) - 1;
    for (int d = 0; d <= limit; ++d)
        if (!cb_check(z, d).holds) return d - 1;
    return limit;  // not reached: CB(l-1) always fails
}

/// Audits the Geramita-Kreuzer-Robbiano constraint on a CB(i) set: for every
/// 0 <= j <= i+1,
///   dh(0) + ... + dh(j)  <=  dh(i+1-j) + ... + dh(i+1).
/// A genuine CB(i) set always satisfies it, so a false return indicates an
/// internal inconsistency, not a property of the input.
inline bool gkr_audit(const PointSet& z, int i) {
    if (i < 0) throw Error(errc::degree_range, "gkr_audit degree must be >= 0");
    if (!cb_check(z, i).holds)
        throw Error(errc::precondition, "gkr_audit: set does not satisfy CB(i)");
    const int d_max = std::max(i + 1, static_cast<int>(z.size()) - 1);
    const HilbertProfile profile = hilbert_profile(z, d_max);
    const auto dh = [&](int j) -> long {
        return j <= profile.d_max() ? static_cast<long>(profile.dh[static_cast<std::size_t>(j)]) : 0;
    };
    for (int j = 0; j <= i + 1; ++j) {
        long lhs = 0, rhs = 0;
        for (int t = 0; t <= j; ++t) lhs += dh(t);
        for (int t = i + 1 - j; t <= i + 1; ++t) rhs += dh(t);
        if (lhs > rhs) return false;
    }
    return true;
}

}  // namespace waring
