#pragma once

#include <map>
#include <vector>

#include "waring/error.hpp"
#include "waring/rational.hpp"

namespace waring {

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// d! / (e_0! e_1! ... e_n!) for a multi-index summing to d.
inline Int multinomial(int d, const std::vector<int>& e) {
    Int result = 1;
    int used = 0;
    for (int ei : e) {
        used += ei;
        result *= binomial(used, ei);
    }
    assert(used == d);
    (void)d;
    return result;
}

/// binomial(n+d, d) as a size; the number of degree-d monomials in n+1 variables.
inline std::size_t basis_size(int n, int d) {
    return static_cast<std::size_t>(binomial(n + d, d));
}

// The global monomial order is graded lexicographic with x0 > x1 > ... > xn.
// Within a fixed degree that is plain lexicographic descent on the exponent
// tuples: x0^d first, xn^d last. All serialized coefficient vectors use it.
struct MonomialBasis {
    int n = 0;  // ambient projective dimension: n+1 variables
    int d = 0;
    std::vector<std::vector<int>> exponents;

    static MonomialBasis make(int n, int d) {
        MonomialBasis b;
        b.n = n;
        b.d = d;
        std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
        emit(b, e, 0, d);
        for (std::size_t i = 0; i < b.exponents.size(); ++i) b.index_[b.exponents[i]] = i;
        return b;
    }

    std::size_t size() const { return exponents.size(); }

    std::size_t index_of(const std::vector<int>& e) const {
        const auto it = index_.find(e);
        if (it == index_.end())
            throw Error(errc::dimension_mismatch, "exponent not in basis");
        return it->second;
    }

private:
    std::map<std::vector<int>, std::size_t> index_;

    static void emit(MonomialBasis& b, std::vector<int>& e, std::size_t pos, int remaining) {
        if (pos + 1 == e.size()) {
            e[pos] = remaining;
            b.exponents.push_back(e);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            e[pos] = v;
            emit(b, e, pos + 1, remaining - v);
        }
        e[pos] = 0;
    }
};

/// prod_i coords[i]^(e[i]), exactly.
inline Int monomial_value(const std::vector<Int>& coords, const std::vector<int>& e) {
    Int v = 1;
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (int t = 0; t < e[i]; ++t) v *= coords[i];
    return v;
}

inline Rational monomial_value(const std::vector<Rational>& coords, const std::vector<int>& e) {
    Rational v = 1;
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (int t = 0; t < e[i]; ++t) v *= coords[i];
    return v;
}

}  // namespace waring
