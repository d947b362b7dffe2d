#pragma once

#include <cstdint>
#include <string>

#include "waring/harness.hpp"
#include "waring/json_io.hpp"

namespace waring {

enum class Command { Hilbert, KruskalRank, CbCheck, Certify, Synthesize, Verify, Harness };

struct RunConfig {
    Command command = Command::Certify;
    std::string input_path;    // point-set document for most commands
    int degree = -1;
    int dmax = -1;
    std::string weights_path;  // certify --weights, synthesize --weights
    std::string tensor_path;   // verify --tensor
    std::string points_path;   // verify --points
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 100;
    std::string generator = "uniform-box";
    int n = 2;
    std::size_t ell = 11;
    long box = 20;
};

namespace detail {

inline int require_degree(const RunConfig& cfg, int minimum) {
    if (cfg.degree < minimum)
        throw Error(errc::usage,
                    "--degree is required and must be >= " + std::to_string(minimum));
    return cfg.degree;
}

}  // namespace detail

/// Dispatches one command to the library and returns the single JSON output
/// document. Pure: identical configs produce byte-identical documents.
inline json run(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::Hilbert: {
            const PointSet a = point_set_from_json(parse_json_file(cfg.input_path));
            return profile_to_json(hilbert_profile(a, cfg.dmax));
        }
        case Command::KruskalRank: {
            const PointSet a = point_set_from_json(parse_json_file(cfg.input_path));
            return kruskal_report_to_json(kruskal_rank(a, detail::require_degree(cfg, 1)));
        }
        case Command::CbCheck: {
            const PointSet a = point_set_from_json(parse_json_file(cfg.input_path));
            if (cfg.degree < 0) throw Error(errc::usage, "--degree is required");
            return cb_report_to_json(cb_check(a, cfg.degree));
        }
        case Command::Certify: {
            const int d = detail::require_degree(cfg, 1);
            if (cfg.weights_path.empty()) {
                const PointSet a = point_set_from_json(parse_json_file(cfg.input_path));
                return certificate_to_json(certify(a, d));
            }
            const auto [n, raw] = raw_points_from_json(parse_json_file(cfg.input_path));
            const auto weights = weights_from_json(parse_json_file(cfg.weights_path));
            const WeightedDecomposition dec = weighted_decomposition_from_raw(n, raw, weights, d);
            return certificate_to_json(certify_weighted(dec.points, dec.weights, d));
        }
        case Command::Synthesize: {
            const int d = detail::require_degree(cfg, 1);
            if (cfg.weights_path.empty())
                throw Error(errc::usage, "synthesize requires --weights");
            const auto [n, raw] = raw_points_from_json(parse_json_file(cfg.input_path));
            const auto weights = weights_from_json(parse_json_file(cfg.weights_path));
            return tensor_to_json(synthesize(weighted_decomposition_from_raw(n, raw, weights, d), d));
        }
        case Command::Verify: {
            if (cfg.tensor_path.empty() || cfg.points_path.empty())
                throw Error(errc::usage, "verify requires --tensor and --points");
            const SymmetricTensor t = tensor_from_json(parse_json_file(cfg.tensor_path));
            const PointSet a = point_set_from_json(parse_json_file(cfg.points_path));
            const auto weights = membership(t, a);
            json out;
            out["in_span"] = weights.has_value();
            if (weights) {
                json w = json::array();
                for (const auto& x : *weights) w.push_back(rational_to_json(x));
                out["weights"] = std::move(w);
                out["minimal"] = is_minimal(t, a);
            } else {
                out["weights"] = nullptr;
                out["minimal"] = nullptr;
            }
            return out;
        }
        case Command::Harness: {
            HarnessConfig h;
            h.seed = cfg.seed;
            h.trials = cfg.trials;
            h.generator = cfg.generator;
            h.n = cfg.n;
            h.ell = cfg.ell;
            h.d = detail::require_degree(cfg, 1);
            h.box = cfg.box;
            return run_harness(h);
        }
    }
    throw Error(errc::usage, "unknown command");
}

}  // namespace waring
