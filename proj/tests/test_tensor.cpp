#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "waring/tensor.hpp"

using namespace waring;
using support::Rng;

namespace {

std::vector<Rational> raw_to_rational(const std::vector<std::vector<Int>>& raw, std::size_t i) {
    std::vector<Rational> out;
    for (const auto& c : raw[i]) out.push_back(Rational(c));
    return out;
}

WeightedDecomposition septic_decomposition() {
    const auto raw = support::septic11_raw();
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : raw) {
        std::vector<Rational> row;
        for (const auto& c : r) row.push_back(Rational(c));
        rows.push_back(std::move(row));
    }
    return weighted_decomposition_from_raw(2, rows, std::vector<Rational>(11, Rational(1)), 7);
}

}  // namespace

TEST_CASE("synthesize a single power") {
    const PointSet one = PointSet::from_raw(2, {{1, 0, 0}});
    const auto t = synthesize({one, {Rational(1)}}, 7);
    REQUIRE(t.coeffs.size() == 36);
    CHECK(t.coeffs[0] == 1);
    for (std::size_t i = 1; i < t.coeffs.size(); ++i) CHECK(t.coeffs[i] == 0);
}

TEST_CASE("synthesize rejects zero weights") {
    const PointSet two = PointSet::from_raw(2, {{1, 0, 0}, {0, 1, 0}});
    CHECK_THROWS_AS(synthesize({two, {Rational(1), Rational(0)}}, 3), Error);
}

TEST_CASE("synthesize is linear in the weights") {
    Rng rng(61);
    const PointSet a = support::random_plane_points(rng, 5);
    std::vector<Rational> w;
    for (std::size_t i = 0; i < 5; ++i) w.push_back(Rational(rng.uniform_int(1, 9)));
    const auto t1 = synthesize({a, w}, 4);
    for (auto& x : w) x *= 2;
    const auto t2 = synthesize({a, w}, 4);
    for (std::size_t i = 0; i < t1.coeffs.size(); ++i) CHECK(t2.coeffs[i] == 2 * t1.coeffs[i]);
}

TEST_CASE("synthesized coefficients expand the actual powers") {
    // Evaluation oracle: the coefficient vector must represent the literal
    // polynomial sum_i a_i L_i(x)^d at every point.
    Rng rng(62);
    for (int trial = 0; trial < 10; ++trial) {
        const auto ell = static_cast<std::size_t>(rng.uniform_int(1, 5));
        const PointSet a = support::random_plane_points(rng, ell, 6);
        const int d = static_cast<int>(rng.uniform_int(1, 5));
        std::vector<Rational> w;
        for (std::size_t i = 0; i < ell; ++i) w.push_back(Rational(rng.uniform_int(1, 5)));
        const auto t = synthesize({a, w}, d);
        for (int probe = 0; probe < 4; ++probe) {
            std::vector<Rational> x{Rational(rng.uniform_int(-5, 5)),
                                    Rational(rng.uniform_int(-5, 5)),
                                    Rational(rng.uniform_int(-5, 5))};
            Rational direct = 0;
            for (std::size_t i = 0; i < ell; ++i) {
                Rational linear = 0;
                for (std::size_t c = 0; c < 3; ++c) linear += Rational(a[i].coords()[c]) * x[c];
                Rational power = 1;
                for (int k = 0; k < d; ++k) power *= linear;
                direct += w[i] * power;
            }
            CHECK(evaluate(t, x) == direct);
        }
    }
}

TEST_CASE("raw ingestion rescales weights with the representative") {
    // (2,4,6) = 2 * (1,2,3): weight 1 on the raw vector is weight 2^d on the
    // canonical one; a sign flip in odd degree negates the weight.
    const auto dec = weighted_decomposition_from_raw(
        2, {{2, 4, 6}, {-1, 0, 1}}, {Rational(1), Rational(1)}, 3);
    CHECK(dec.weights == std::vector<Rational>{Rational(8), Rational(-1)});
    CHECK(dec.points[0].coords() == std::vector<Int>{1, 2, 3});
    CHECK(dec.points[1].coords() == std::vector<Int>{1, 0, -1});
}

TEST_CASE("the septic example expands to the printed tensor") {
    const auto dec = septic_decomposition();
    CHECK(dec.weights ==
          std::vector<Rational>{1, 1, 1, 1, 1, 1, 1, 1, -1, -1, 1});
    const auto t = synthesize(dec, 7);
    // Ground truth: our own exact expansion of the sum of seventh powers,
    // cross-checked against the printed table in plain power coordinates.
    const std::vector<long> literal{
        2191,  -5943,  22267,  5229,   -38556, 76251,  -1785,  45150,  -145950,
        200585, 1575,  -28560, 57540,  -233520, 214025, 10521,  36330,  72240,
        288120, -179970, 241311, 483,   -47376, -108570, -236040, -141330,
        -218736, 52717, 4500,  16730,  92190,  197260, 253190, 241080, 62020, 37272};
    const std::vector<long> printed{
        2191, -849, 3181, 249, -918, 3631, -51, 430, -1390, 5731, 45, -204,
        274, -1668, 6115, 501, 346, 344, 1372, -1714, 11491, 69, -1128, -1034,
        -1686, -1346, -5208, 7531, 4500, 2390, 4390, 5636, 7234, 11480, 8860, 37272};
    REQUIRE(t.coeffs.size() == 36);
    const auto entries = symmetric_entries(t);
    for (std::size_t i = 0; i < 36; ++i) {
        CHECK(t.coeffs[i] == literal[i]);
        CHECK(entries[i] == printed[i]);
    }
}

TEST_CASE("membership round trip and failures") {
    Rng rng(63);
    for (int trial = 0; trial < 8; ++trial) {
        const auto ell = static_cast<std::size_t>(rng.uniform_int(1, 5));
        const PointSet a = support::random_plane_points(rng, ell, 6);
        const int d = static_cast<int>(rng.uniform_int(2, 4));
        if (rank(evaluation_matrix(a, d)) != ell) continue;
        std::vector<Rational> w;
        for (std::size_t i = 0; i < ell; ++i) w.push_back(Rational(rng.uniform_int(1, 7)));
        const auto t = synthesize({a, w}, d);
        const auto recovered = membership(t, a);
        REQUIRE(recovered);
        CHECK(*recovered == w);
        CHECK(is_minimal(t, a));
    }

    const PointSet x_axis = PointSet::from_raw(2, {{1, 0, 0}});
    const auto x7 = synthesize({x_axis, {Rational(1)}}, 7);
    CHECK_FALSE(membership(x7, PointSet::from_raw(2, {{0, 1, 0}})));
}

TEST_CASE("septic tensor leaves no redundant point") {
    const auto dec = septic_decomposition();
    const auto t = synthesize(dec, 7);
    REQUIRE(membership(t, dec.points));
    CHECK(is_minimal(t, dec.points));
    for (std::size_t i = 0; i < dec.points.size(); ++i)
        CHECK_FALSE(membership(t, dec.points.without(i)));
}

TEST_CASE("minimality failures") {
    const PointSet pair = PointSet::from_raw(2, {{1, 0, 0}, {0, 1, 0}});
    const auto x7 = synthesize({PointSet::from_raw(2, {{1, 0, 0}}), {Rational(1)}}, 7);
    CHECK_FALSE(is_minimal(x7, pair));  // weight on the second point is zero

    // Dependent Veronese images: three collinear points in degree one.
    const PointSet line = PointSet::from_raw(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    SymmetricTensor x{2, 1, {Rational(1), Rational(0), Rational(0)}};
    REQUIRE(membership(x, line));
    CHECK_FALSE(is_minimal(x, line));

    CHECK_THROWS_AS(is_minimal(x7, PointSet::from_raw(2, {{0, 1, 0}})), Error);
}

TEST_CASE("catalecticant ranks") {
    Rng rng(64);
    for (int trial = 0; trial < 6; ++trial) {
        const PointSet one = support::random_plane_points(rng, 1, 7);
        const int d = static_cast<int>(rng.uniform_int(3, 6));
        const auto power = synthesize({one, {Rational(rng.uniform_int(1, 4))}}, d);
        for (int s = 1; s < d; ++s) CHECK(catalecticant_rank(power, s) == 1);
    }

    const auto septic = synthesize(septic_decomposition(), 7);
    CHECK(catalecticant_rank(septic, 3) == 10);
    CHECK_THROWS_AS(catalecticant_rank(septic, 0), Error);
    CHECK_THROWS_AS(catalecticant_rank(septic, 7), Error);

    // Two binary powers: x^5 + y^5 has middle catalecticant rank two.
    const PointSet binary = PointSet::from_raw(1, {{1, 0}, {0, 1}});
    const auto t = synthesize({binary, {Rational(1), Rational(1)}}, 5);
    CHECK(catalecticant_rank(t, 2) == 2);
}

TEST_CASE("catalecticant rank bounds the decomposition length") {
    Rng rng(65);
    for (int trial = 0; trial < 8; ++trial) {
        const auto ell = static_cast<std::size_t>(rng.uniform_int(1, 6));
        const PointSet a = support::random_plane_points(rng, ell, 5);
        const int d = static_cast<int>(rng.uniform_int(3, 5));
        std::vector<Rational> w;
        for (std::size_t i = 0; i < ell; ++i) w.push_back(Rational(rng.uniform_int(1, 3)));
        const auto t = synthesize({a, w}, d);
        for (int s = 1; s < d; ++s) {
            const std::size_t c = catalecticant_rank(t, s);
            CHECK(c <= ell);
            CHECK(c <= std::min(basis_size(2, s), basis_size(2, d - s)));
        }
    }
}
