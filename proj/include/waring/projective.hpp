#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "waring/error.hpp"
#include "waring/matrix.hpp"
#include "waring/monomial.hpp"
#include "waring/rational.hpp"

namespace waring {

// A point of P^n as its canonical representative: a primitive integer vector
// (gcd of absolute values 1) whose first nonzero coordinate is positive.
class ProjectivePoint {
public:
    static ProjectivePoint normalize(std::vector<Int> raw) {
        using boost::multiprecision::gcd;
        Int g = 0;
        for (const auto& c : raw) g = gcd(g, c);
        if (g == 0) throw Error(errc::zero_vector, "projective point must be nonzero");
        for (const auto& c : raw) {
            if (c != 0) {
                if (c < 0) g = -g;
                break;
            }
        }
        for (auto& c : raw) c /= g;
        ProjectivePoint p;
        p.coords_ = std::move(raw);
        return p;
    }

    const std::vector<Int>& coords() const { return coords_; }
    int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }

    bool operator==(const ProjectivePoint&) const = default;
    bool operator<(const ProjectivePoint& o) const { return coords_ < o.coords_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += coords_[i].str();
        }
        return s + ")";
    }

private:
    ProjectivePoint() = default;
    std::vector<Int> coords_;
};

inline ProjectivePoint normalize(std::vector<Int> raw) {
    return ProjectivePoint::normalize(std::move(raw));
}

// An ordered set of pairwise distinct points of a common P^n.
class PointSet {
public:
    PointSet(int ambient_dim, std::vector<ProjectivePoint> points)
        : n_(ambient_dim), points_(std::move(points)) {
        for (const auto& p : points_)
            if (p.ambient_dim() != n_)
                throw Error(errc::dimension_mismatch, "point has wrong ambient dimension");
        for (std::size_t i = 0; i < points_.size(); ++i)
            for (std::size_t j = i + 1; j < points_.size(); ++j)
                if (points_[i] == points_[j])
                    throw Error(errc::duplicate_point,
                                "duplicate point " + points_[i].str());
    }

    static PointSet from_raw(int ambient_dim, const std::vector<std::vector<Int>>& raw) {
        std::vector<ProjectivePoint> pts;
        pts.reserve(raw.size());
        for (const auto& r : raw) pts.push_back(normalize(r));
        return PointSet(ambient_dim, std::move(pts));
    }

    int ambient_dim() const { return n_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(const ProjectivePoint& p) const {
        return std::find(points_.begin(), points_.end(), p) != points_.end();
    }

    PointSet subset(const std::vector<std::size_t>& indices) const {
        std::vector<ProjectivePoint> pts;
        pts.reserve(indices.size());
        for (std::size_t i : indices) pts.push_back(points_[i]);
        return PointSet(n_, std::move(pts));
    }

    PointSet without(std::size_t index) const {
        std::vector<ProjectivePoint> pts;
        pts.reserve(points_.size() - 1);
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (i != index) pts.push_back(points_[i]);
        return PointSet(n_, std::move(pts));
    }

    /// Concatenation; rejects overlapping operands.
    PointSet disjoint_union(const PointSet& other) const {
        if (n_ != other.n_)
            throw Error(errc::dimension_mismatch, "union of sets in different spaces");
        std::vector<ProjectivePoint> pts = points_;
        pts.insert(pts.end(), other.points_.begin(), other.points_.end());
        return PointSet(n_, std::move(pts));  // duplicate check rejects overlap
    }

    bool operator==(const PointSet&) const = default;

private:
    int n_;
    std::vector<ProjectivePoint> points_;
};

/// Integer evaluation rows: row i holds every degree-d monomial evaluated at
/// the canonical coordinates of point i. The fast path shared by the rank
/// scans below.
inline std::vector<std::vector<Int>> evaluation_rows(const PointSet& z, int d) {
    const MonomialBasis basis = MonomialBasis::make(z.ambient_dim(), d);
    std::vector<std::vector<Int>> rows;
    rows.reserve(z.size());
    for (const auto& p : z) {
        std::vector<Int> row;
        row.reserve(basis.size());
        for (const auto& e : basis.exponents) row.push_back(monomial_value(p.coords(), e));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// The l(Z) x binomial(n+d,d) evaluation map of degree d on Z.
inline Matrix evaluation_matrix(const PointSet& z, int d) {
    if (d < 0) throw Error(errc::degree_range, "evaluation degree must be >= 0");
    const auto rows = evaluation_rows(z, d);
    Matrix m(z.size(), basis_size(z.ambient_dim(), d));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

/// Veronese embedding of degree d: all degree-d monomials of the canonical
/// coordinates, renormalized as a point of P^(binomial(n+d,d)-1).
inline ProjectivePoint veronese(const ProjectivePoint& p, int d) {
    if (d < 1) throw Error(errc::degree_range, "veronese degree must be >= 1");
    const MonomialBasis basis = MonomialBasis::make(p.ambient_dim(), d);
    std::vector<Int> coords;
    coords.reserve(basis.size());
    for (const auto& e : basis.exponents) coords.push_back(monomial_value(p.coords(), e));
    return normalize(std::move(coords));
}

}  // namespace waring
