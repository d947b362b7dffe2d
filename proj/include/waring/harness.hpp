#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "waring/cayley_bacharach.hpp"
#include "waring/certify.hpp"
#include "waring/hilbert.hpp"
#include "waring/json_io.hpp"
#include "waring/random.hpp"

namespace waring {

inline constexpr std::uint64_t kDefaultSeed = 20260810;

struct HarnessConfig {
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 100;
    std::string generator = "uniform-box";
    int n = 2;
    std::size_t ell = 11;
    int d = 7;
    long box = 20;
};

namespace detail {

// Re-validations run on every sampled set. Each returns an empty string on
// success and a human-readable violation tag otherwise; the caller dumps the
// offending set as the counterexample.

inline std::string check_difference_decay(const HilbertProfile& p) {
    for (int j = 1; j < p.d_max(); ++j) {
        const std::size_t cur = p.dh[static_cast<std::size_t>(j)];
        const std::size_t nxt = p.dh[static_cast<std::size_t>(j) + 1];
        if (cur <= static_cast<std::size_t>(j) && cur < nxt)
            return "difference-decay: dh(" + std::to_string(j) + ") < dh(" +
                   std::to_string(j + 1) + ")";
        if (cur == 0 && nxt != 0)
            return "difference-decay: dh restarts after reaching 0";
    }
    return {};
}

inline std::string check_inclusion_monotonicity(const PointSet& z, const PointSet& sub,
                                                int d_max) {
    const HilbertProfile big = hilbert_profile(z, d_max);
    const HilbertProfile small = hilbert_profile(sub, d_max);
    for (int j = 0; j <= d_max; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        if (small.h[jj] > big.h[jj]) return "inclusion-monotonicity: h";
        if (small.dh[jj] > big.dh[jj]) return "inclusion-monotonicity: dh";
    }
    return {};
}

inline std::string check_cb_down_closure(const PointSet& z, int d_limit) {
    bool failed_before = false;
    for (int d = 0; d <= d_limit; ++d) {
        const bool holds = cb_check(z, d).holds;
        if (holds && failed_before)
            return "cb-down-closure: CB(" + std::to_string(d) + ") holds after a failure";
        if (!holds) failed_before = true;
    }
    return {};
}

/// Grassmann formula against the direct span computation; applicable when
/// both halves impose independent conditions in degree d.
inline std::string check_grassmann(const PointSet& a, const PointSet& b, int d,
                                   bool& applicable) {
    applicable = hilbert_function(a, d) == a.size() && hilbert_function(b, d) == b.size();
    if (!applicable) return {};
    if (grassmann_intersection_dim(a, b, d) != span_intersection_dim(a, b, d))
        return "grassmann: h^1 route disagrees with direct spans";
    return {};
}

}  // namespace detail

/// Samples point sets from the named generator, certifies each, re-validates
/// the Hilbert-function and Cayley-Bacharach invariants on every sample, and
/// reports per-rule firing counts. Fully reproducible from the seed; the
/// first invariant violation aborts the sweep with a counterexample dump.
inline json run_harness(const HarnessConfig& cfg) {
    if (cfg.trials < 1) throw Error(errc::usage, "harness needs trials >= 1");
    if (cfg.ell < 1) throw Error(errc::usage, "harness needs ell >= 1");
    if (cfg.d < 1) throw Error(errc::usage, "harness needs degree >= 1");

    std::map<std::string, std::size_t> rules;
    std::map<std::string, std::size_t> verdicts;
    std::map<std::string, std::size_t> diagnostics;
    std::size_t grassmann_checked = 0, grassmann_skipped = 0;
    json violations = json::array();
    std::size_t trials_run = 0;

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(trial_seed(cfg.seed, trial));
        const PointSet a = generate(cfg.generator, rng, cfg.n, cfg.ell, cfg.box);
        ++trials_run;

        const Certificate cert = certify(a, cfg.d);
        ++verdicts[verdict_name(cert.verdict)];
        ++rules[cert.rule ? rule_name(*cert.rule) : "NONE"];
        for (const auto& diag : cert.diagnostics)
            ++diagnostics[diag.substr(0, diag.find(':'))];

        std::string violation;
        const int d_max = static_cast<int>(a.size()) - 1;
        violation = detail::check_difference_decay(hilbert_profile(a, d_max));

        if (violation.empty() && a.size() >= 2) {
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (rng.coin()) keep.push_back(i);
            if (keep.empty()) keep.push_back(0);
            violation = detail::check_inclusion_monotonicity(a, a.subset(keep), d_max);
        }

        if (violation.empty())
            violation = detail::check_cb_down_closure(a, std::min(cfg.d, d_max));

        if (violation.empty() && a.size() >= 2) {
            std::vector<std::size_t> left, right;
            for (std::size_t i = 0; i < a.size(); ++i)
                (i % 2 == 0 ? left : right).push_back(i);
            const int dd = static_cast<int>(rng.uniform_int(1, std::min(cfg.d, 4)));
            bool applicable = false;
            violation = detail::check_grassmann(a.subset(left), a.subset(right), dd, applicable);
            ++(applicable ? grassmann_checked : grassmann_skipped);
        }

        if (!violation.empty()) {
            violations.push_back(json{{"trial", trial},
                                      {"invariant", violation},
                                      {"points", point_set_to_json(a)}});
            break;
        }
    }

    json out;
    out["seed"] = cfg.seed;
    out["trials"] = cfg.trials;
    out["trials_run"] = trials_run;
    out["generator"] = cfg.generator;
    out["n"] = cfg.n;
    out["ell"] = cfg.ell;
    out["d"] = cfg.d;
    out["box"] = cfg.box;
    out["rules"] = rules;
    out["verdicts"] = verdicts;
    out["diagnostics"] = diagnostics;
    out["grassmann_checks"] = json{{"run", grassmann_checked}, {"skipped", grassmann_skipped}};
    out["violations"] = violations;
    return out;
}

}  // namespace waring
