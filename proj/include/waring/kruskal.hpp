#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "waring/error.hpp"
#include "waring/hilbert.hpp"
#include "waring/projective.hpp"

namespace waring {

// k_d(A) with, when the rank is not maximal, the lexicographically first
// dependent subset of size rank+1 as a reproducible witness.
struct KruskalReport {
    int degree = 0;
    std::size_t rank = 0;
    std::optional<std::vector<std::size_t>> witness;
};

/// d-th Kruskal rank: the largest k such that every k-subset of v_d(A) is
/// linearly independent. Levels k = 1, 2, ... are scanned with subsets in
/// lexicographic index order; the first dependent subset stops the scan. If
/// the full evaluation matrix already has rank l(A), the maximum
/// min(l(A), binomial(n+d,d)) is returned with no further work.
inline KruskalReport kruskal_rank(const PointSet& a, int d) {
    if (a.empty()) throw Error(errc::empty_set, "kruskal_rank of empty set");
    if (d < 1) throw Error(errc::degree_range, "kruskal_rank degree must be >= 1");
    const auto rows = evaluation_rows(a, d);
    const std::size_t ell = a.size();
    const std::size_t ncols = rows.front().size();
    const std::size_t kmax = std::min(ell, ncols);

    if (detail::bareiss_rank(rows) == ell) return {d, kmax, std::nullopt};

    for (std::size_t k = 1; k <= kmax; ++k) {
        auto idx = detail::first_combination(k);
        do {
            std::vector<std::vector<Int>> sub;
            sub.reserve(k);
            for (std::size_t i : idx) sub.push_back(rows[i]);
            if (detail::bareiss_rank(std::move(sub)) < k)
                return {d, k - 1, idx};
        } while (detail::next_combination(idx, ell));
    }
    return {d, kmax, std::nullopt};
}

// One reshaped criterion check: for a partition d = a+b+c the decomposition
// is certified when 2r <= k_a + k_b + k_c - 2.
struct PartitionCheck {
    std::array<int, 3> partition{};            // a >= b >= c >= 1
    std::array<std::size_t, 3> ranks{};        // k_a, k_b, k_c
    Rational bound;                            // (k_a + k_b + k_c - 2) / 2
    bool passes = false;
};

/// All partitions of d into three parts a >= b >= c >= 1.
inline std::vector<std::array<int, 3>> partitions_three(int d) {
    std::vector<std::array<int, 3>> parts;
    for (int c = 1; 3 * c <= d; ++c)
        for (int b = c; 2 * b <= d - c; ++b)
            parts.push_back({d - b - c, b, c});
    return parts;
}

/// Evaluates the reshaped Kruskal criterion over every three-part partition
/// of d. Checks come back sorted by bound, widest first. A passing check
/// certifies identifiability conditionally on A being a minimal
/// decomposition; combining and recording that is the certifier's job.
inline std::vector<PartitionCheck> kruskal_criterion(const PointSet& a, int d) {
    if (a.empty()) throw Error(errc::empty_set, "kruskal_criterion of empty set");
    if (d < 3)
        throw Error(errc::degree_range,
                    "kruskal_criterion inapplicable: no three-part partition of d < 3");
    std::vector<std::size_t> rank_memo(static_cast<std::size_t>(d), 0);
    std::vector<bool> have(static_cast<std::size_t>(d), false);
    const auto k_of = [&](int part) {
        if (!have[static_cast<std::size_t>(part)]) {
            rank_memo[static_cast<std::size_t>(part)] = kruskal_rank(a, part).rank;
            have[static_cast<std::size_t>(part)] = true;
        }
        return rank_memo[static_cast<std::size_t>(part)];
    };

    const std::size_t r = a.size();
    std::vector<PartitionCheck> checks;
    for (const auto& p : partitions_three(d)) {
        PartitionCheck chk;
        chk.partition = p;
        chk.ranks = {k_of(p[0]), k_of(p[1]), k_of(p[2])};
        const std::size_t sum = chk.ranks[0] + chk.ranks[1] + chk.ranks[2];
        chk.bound = Rational(static_cast<long>(sum) - 2) / 2;
        chk.passes = 2 * r + 2 <= sum;
        checks.push_back(std::move(chk));
    }
    std::sort(checks.begin(), checks.end(), [](const PartitionCheck& x, const PartitionCheck& y) {
        if (x.bound != y.bound) return x.bound > y.bound;
        return x.partition > y.partition;
    });
    return checks;
}

inline bool any_partition_passes(const std::vector<PartitionCheck>& checks) {
    return std::any_of(checks.begin(), checks.end(),
                       [](const PartitionCheck& c) { return c.passes; });
}

}  // namespace waring
