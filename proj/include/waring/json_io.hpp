#pragma once

#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "waring/certify.hpp"
#include "waring/cayley_bacharach.hpp"
#include "waring/error.hpp"
#include "waring/hilbert.hpp"
#include "waring/kruskal.hpp"
#include "waring/projective.hpp"
#include "waring/rational.hpp"
#include "waring/tensor.hpp"

namespace waring {

using json = nlohmann::json;

inline json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(errc::json_parse, "malformed JSON in '" + path + "': " + e.what());
    }
}

/// Accepts an integer number or a "p"/"p/q" string; floats are rejected to
/// keep everything exact.
inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(errc::json_schema, "expected integer or rational string, got " + j.dump());
}

/// Exact rationals serialize as strings "p" / "p/q" for lossless round trips.
inline json rational_to_json(const Rational& q) { return q.str(); }

inline json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

// Point sets: {"n": 2, "points": [[1,0,0], ...]} with integer entries
// (rational entries are cleared to the primitive integer representative).

/// Raw coordinate rows, before normalization. Weighted-decomposition inputs
/// need them: the weight rescaling depends on the given representatives.
inline std::pair<int, std::vector<std::vector<Rational>>> raw_points_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("points"))
        throw Error(errc::json_schema, R"(point set needs {"n": ..., "points": [...]})");
    if (!j["n"].is_number_integer())
        throw Error(errc::json_schema, "\"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1) throw Error(errc::json_schema, "\"n\" must be >= 1");
    if (!j["points"].is_array())
        throw Error(errc::json_schema, "\"points\" must be an array");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j["points"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n) + 1)
            throw Error(errc::json_schema, "each point needs n+1 coordinates");
        std::vector<Rational> coords;
        for (const auto& c : row) coords.push_back(rational_from_json(c));
        rows.push_back(std::move(coords));
    }
    return {n, std::move(rows)};
}

inline PointSet point_set_from_json(const json& j) {
    const auto [n, rows] = raw_points_from_json(j);
    std::vector<ProjectivePoint> pts;
    pts.reserve(rows.size());
    for (const auto& row : rows) {
        const std::vector<Rational> cleared = primitive_scale(row);
        std::vector<Int> raw;
        raw.reserve(cleared.size());
        for (const auto& c : cleared) raw.push_back(numerator_of(c));
        pts.push_back(normalize(std::move(raw)));
    }
    return PointSet(n, std::move(pts));
}

inline json point_set_to_json(const PointSet& a) {
    json points = json::array();
    for (const auto& p : a) {
        json row = json::array();
        for (const auto& c : p.coords()) row.push_back(int_to_json(c));
        points.push_back(std::move(row));
    }
    return json{{"n", a.ambient_dim()}, {"points", std::move(points)}};
}

// Tensors: {"n": 2, "d": 7, "order": "grlex", "coeffs": ["2191", ...]},
// coefficients in the global graded-lex order, exact strings.
inline SymmetricTensor tensor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("coeffs"))
        throw Error(errc::json_schema, R"(tensor needs {"n", "d", "order", "coeffs"})");
    if (j.value("order", "grlex") != "grlex")
        throw Error(errc::json_schema, "unsupported monomial order '" +
                                           j.value("order", "") + "' (only grlex)");
    SymmetricTensor t;
    t.n = j["n"].get<int>();
    t.d = j["d"].get<int>();
    if (t.n < 1 || t.d < 1) throw Error(errc::json_schema, "tensor needs n >= 1, d >= 1");
    if (!j["coeffs"].is_array() || j["coeffs"].size() != basis_size(t.n, t.d))
        throw Error(errc::json_schema,
                    "tensor of degree " + std::to_string(t.d) + " in " +
                        std::to_string(t.n + 1) + " variables needs " +
                        std::to_string(basis_size(t.n, t.d)) + " coefficients");
    for (const auto& c : j["coeffs"]) t.coeffs.push_back(rational_from_json(c));
    return t;
}

inline json tensor_to_json(const SymmetricTensor& t) {
    json coeffs = json::array();
    for (const auto& c : t.coeffs) coeffs.push_back(rational_to_json(c));
    return json{{"n", t.n}, {"d", t.d}, {"order", "grlex"}, {"coeffs", std::move(coeffs)}};
}

/// Weights: either a bare array or {"weights": [...]}.
inline std::vector<Rational> weights_from_json(const json& j) {
    const json& arr = j.is_object() && j.contains("weights") ? j["weights"] : j;
    if (!arr.is_array())
        throw Error(errc::json_schema, "weights must be an array of rationals");
    std::vector<Rational> w;
    for (const auto& c : arr) w.push_back(rational_from_json(c));
    return w;
}

inline json profile_to_json(const HilbertProfile& p) {
    return json{{"l", p.set_size}, {"h", p.h}, {"dh", p.dh}, {"h1", p.h1}};
}

inline json kruskal_report_to_json(const KruskalReport& r) {
    json j{{"d", r.degree}, {"k", r.rank}};
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    return j;
}

inline json cb_report_to_json(const CBReport& r) {
    json j{{"degree", r.degree}, {"holds", r.holds}};
    j["separating_point"] = r.separating_point ? json(*r.separating_point) : json(nullptr);
    if (r.separating_form) {
        json form = json::array();
        for (const auto& c : *r.separating_form) form.push_back(rational_to_json(c));
        j["separating_form"] = std::move(form);
    } else {
        j["separating_form"] = nullptr;
    }
    return j;
}

inline json partition_check_to_json(const PartitionCheck& c) {
    return json{{"partition", c.partition},
                {"ranks", c.ranks},
                {"bound", c.bound.str()},
                {"passes", c.passes}};
}

inline json cubic_containment_to_json(const CubicContainment& c) {
    json j{{"contained", c.contained}, {"unique", c.unique}};
    if (c.cubic_form) {
        json form = json::array();
        for (const auto& x : *c.cubic_form) form.push_back(rational_to_json(x));
        j["cubic_form"] = std::move(form);
    } else {
        j["cubic_form"] = nullptr;
    }
    return j;
}

inline json certificate_to_json(const Certificate& c) {
    json evidence;
    evidence["n"] = c.n;
    evidence["l"] = c.ell;
    json ranks = json::object();
    for (const auto& [deg, k] : c.ranks) ranks[std::to_string(deg)] = k;
    evidence["ranks"] = std::move(ranks);
    json checks = json::array();
    for (const auto& chk : c.partition_checks) checks.push_back(partition_check_to_json(chk));
    evidence["partition_checks"] = std::move(checks);
    json applicable = json::array();
    for (Rule r : c.applicable_rules) applicable.push_back(rule_name(r));
    evidence["applicable_rules"] = std::move(applicable);
    if (c.q) evidence["q"] = *c.q;
    if (c.cubic) evidence["cubic"] = cubic_containment_to_json(*c.cubic);
    if (c.dh) evidence["dh"] = *c.dh;
    evidence["diagnostics"] = c.diagnostics;

    json j;
    j["verdict"] = verdict_name(c.verdict);
    j["rule"] = c.rule ? json(rule_name(*c.rule)) : json(nullptr);
    j["d"] = c.d;
    j["assumptions"] = json::array({json{{"statement", "A is a minimal decomposition of T"},
                                         {"verified", c.minimality_verified}}});
    j["evidence"] = std::move(evidence);
    return j;
}

}  // namespace waring
