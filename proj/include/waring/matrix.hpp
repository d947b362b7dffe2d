#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "waring/error.hpp"
#include "waring/rational.hpp"

namespace waring {

// Dense row-major matrix over Q. Values are immutable after construction in
// all code paths below; every operation is a pure function of its inputs.
// Empty matrices (0 rows or 0 columns) are legal and have rank 0.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw Error(errc::dimension_mismatch, "ragged initializer rows");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        Matrix m;
        m.rows_ = rows.size();
        m.cols_ = m.rows_ ? rows.front().size() : 0;
        m.data_.reserve(m.rows_ * m.cols_);
        for (const auto& r : rows) {
            if (r.size() != m.cols_)
                throw Error(errc::dimension_mismatch, "ragged rows");
            m.data_.insert(m.data_.end(), r.begin(), r.end());
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    std::vector<Rational> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

namespace detail {

inline Int exact_div(const Int& num, const Int& den) {
    assert(den != 0 && num % den == 0);
    return num / den;
}

/// Fraction-free (Bareiss) elimination rank of integer rows. Pivot choice is
/// the first nonzero entry in column order, rows scanned top-down, so the
/// result is deterministic. Destroys its argument.
inline std::size_t bareiss_rank(std::vector<std::vector<Int>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

/// Clears denominators row by row; row scaling changes neither the rank nor
/// which minors vanish.
inline std::vector<std::vector<Int>> integer_rows(const Matrix& m) {
    using boost::multiprecision::lcm;
    std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) den = lcm(den, denominator_of(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = numerator_of(m(i, j)) * (den / denominator_of(m(i, j)));
    }
    return out;
}

/// In-place reduced row echelon form; returns the pivot columns. Division-
/// based Gauss-Jordan, first-nonzero pivot in column order.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Exact determinant of an integer matrix by Laplace expansion with dynamic
/// programming over column subsets, O(n * 2^n). Deliberately shares no code
/// with the elimination above so the two can cross-validate each other.
inline Int subset_determinant(const std::vector<std::vector<Int>>& a,
                              const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    assert(cols.size() == k);
    if (k == 0) return 1;
    std::vector<Int> dp(std::size_t{1} << k, 0);
    dp[0] = 1;
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
        const int i = __builtin_popcountll(mask) - 1;  // row index being placed
        Int acc = 0;
        int pos = 0;
        for (std::size_t b = 0; b < k; ++b) {
            if (!(mask & (std::size_t{1} << b))) continue;
            const Int& entry = a[rows[i]][cols[b]];
            if (entry != 0) {
                const Int term = entry * dp[mask ^ (std::size_t{1} << b)];
                if (pos % 2 == 0) acc += term; else acc -= term;
            }
            ++pos;
        }
        dp[mask] = acc;
    }
    return dp[dp.size() - 1];
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

}  // namespace detail

/// Rank over Q. Clears denominators, then fraction-free elimination.
inline std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    return detail::bareiss_rank(detail::integer_rows(m));
}

/// Basis of the right null space, canonical: produced from the RREF with the
/// free variable set to one, scaled to a primitive integer vector with
/// positive first nonzero entry. length = cols - rank.
inline std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
    if (m.cols() == 0) return {};
    Matrix r = m;
    const std::vector<std::size_t> pivots = detail::rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -r(t, f);
        basis.push_back(primitive_scale(std::move(v)));
    }
    return basis;
}

/// One exact solution of M x = b (free variables set to zero), or nullopt if
/// the system is inconsistent. Unique when rank(M) = cols.
inline std::optional<std::vector<Rational>> solve(const Matrix& m,
                                                  const std::vector<Rational>& b) {
    if (b.size() != m.rows())
        throw Error(errc::dimension_mismatch, "solve: right-hand side has wrong length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const std::vector<std::size_t> pivots = detail::rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = aug(t, m.cols());
    return x;
}

/// Independent rank oracle: the largest k admitting a nonzero k x k minor,
/// found by exhaustive enumeration (levels scanned upward, each level short-
/// circuits on its first nonzero minor). Guarded to rows, cols <= 12.
inline std::size_t rank_by_minors(const Matrix& m) {
    if (m.rows() > 12 || m.cols() > 12)
        throw Error(errc::size_guard, "rank_by_minors: matrix larger than 12 x 12");
    if (m.empty()) return 0;
    const auto a = detail::integer_rows(m);
    const std::size_t kmax = std::min(m.rows(), m.cols());
    std::size_t result = 0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        bool found = false;
        auto rows_idx = detail::first_combination(k);
        do {
            auto cols_idx = detail::first_combination(k);
            do {
                if (detail::subset_determinant(a, rows_idx, cols_idx) != 0) {
                    found = true;
                    break;
                }
            } while (detail::next_combination(cols_idx, m.cols()));
            if (found) break;
        } while (detail::next_combination(rows_idx, m.rows()));
        if (!found) return result;
        result = k;
    }
    return result;
}

}  // namespace waring
