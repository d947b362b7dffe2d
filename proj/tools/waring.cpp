// Command-line front end: exact certification of Waring-decomposition
// identifiability for point sets with integer coordinates.
//
// One JSON document goes to standard output (or --out); human-readable
// summaries go to standard error. Exit codes: 0 success (INCONCLUSIVE
// certificates included), 1 input/domain errors, 2 usage errors, 4 internal
// invariant violations detected by the harness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "waring/cli.hpp"

namespace {

std::string summary_line(const waring::RunConfig& cfg, const waring::json& out) {
    using waring::Command;
    switch (cfg.command) {
        case Command::Certify:
            return "certify: " + out["verdict"].get<std::string>() +
                   (out["rule"].is_null() ? "" : " via " + out["rule"].get<std::string>());
        case Command::KruskalRank:
            return "kruskal-rank: k_" + std::to_string(cfg.degree) + " = " +
                   std::to_string(out["k"].get<std::size_t>());
        case Command::CbCheck:
            return std::string("cb-check: CB(") + std::to_string(cfg.degree) + ") " +
                   (out["holds"].get<bool>() ? "holds" : "fails");
        case Command::Hilbert:
            return "hilbert: profile of " + std::to_string(out["l"].get<std::size_t>()) +
                   " points through degree " + std::to_string(out["h"].size() - 1);
        case Command::Synthesize:
            return "synthesize: degree-" + std::to_string(out["d"].get<int>()) + " tensor, " +
                   std::to_string(out["coeffs"].size()) + " coefficients";
        case Command::Verify:
            return std::string("verify: ") +
                   (out["in_span"].get<bool>() ? "in span" : "not in span");
        case Command::Harness:
            return "harness: " + std::to_string(out["trials_run"].get<std::size_t>()) +
                   " trials, " + std::to_string(out["violations"].size()) + " violations";
    }
    return {};
}

int emit(const waring::json& doc, const std::string& out_path, const std::string& command) {
    std::string path = out_path;
    if (path.empty()) {
        if (const char* dir = std::getenv("WARING_OUT_DIR"))
            path = std::string(dir) + "/" + command + ".json";
    }
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(path);
    if (!file) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return 1;
    }
    file << text;
    std::cerr << "wrote " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact identifiability certificates for Waring decompositions"};
    app.require_subcommand(1);

    waring::RunConfig cfg;
    std::string out_path;
    std::string command_name;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out,-o", out_path, "write the JSON document to this file");
    };
    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input_path, "point-set JSON document")->required();
        add_common(sub);
    };
    const auto add_degree = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--degree,-d", cfg.degree, "degree of the form");
        if (required) opt->required();
    };

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table of a point set");
    add_input(hilbert);
    hilbert->add_option("--dmax", cfg.dmax, "top degree of the table (default l-1)");
    hilbert->callback([&] { cfg.command = waring::Command::Hilbert; command_name = "hilbert"; });

    auto* kruskal = app.add_subcommand("kruskal-rank", "d-th Kruskal rank of a point set");
    add_input(kruskal);
    add_degree(kruskal, true);
    kruskal->callback(
        [&] { cfg.command = waring::Command::KruskalRank; command_name = "kruskal-rank"; });

    auto* cb = app.add_subcommand("cb-check", "Cayley-Bacharach property in one degree");
    add_input(cb);
    add_degree(cb, true);
    cb->callback([&] { cfg.command = waring::Command::CbCheck; command_name = "cb-check"; });

    auto* certify = app.add_subcommand("certify", "identifiability certificate for a decomposition");
    add_input(certify);
    add_degree(certify, true);
    certify->add_option("--weights", cfg.weights_path,
                        "weights JSON; verifies minimality of the weighted decomposition");
    certify->callback([&] { cfg.command = waring::Command::Certify; command_name = "certify"; });

    auto* synth = app.add_subcommand("synthesize", "expand a weighted decomposition into a tensor");
    add_input(synth);
    add_degree(synth, true);
    synth->add_option("--weights", cfg.weights_path, "weights JSON document")->required();
    synth->callback(
        [&] { cfg.command = waring::Command::Synthesize; command_name = "synthesize"; });

    auto* verify = app.add_subcommand("verify", "membership and minimality of a tensor in a span");
    verify->add_option("--tensor", cfg.tensor_path, "tensor JSON document")->required();
    verify->add_option("--points", cfg.points_path, "point-set JSON document")->required();
    add_common(verify);
    verify->callback([&] { cfg.command = waring::Command::Verify; command_name = "verify"; });

    auto* harness = app.add_subcommand("harness", "randomized certification and invariant sweep");
    add_degree(harness, true);
    harness->add_option("--seed", cfg.seed, "RNG seed (fixed default for reproducibility)");
    harness->add_option("--trials", cfg.trials, "number of sampled point sets");
    harness->add_option("--generator", cfg.generator,
                        "uniform-box | on-conic | on-cubic | with-collinear-triple");
    harness->add_option("--ell", cfg.ell, "points per sample");
    harness->add_option("--ambient", cfg.n, "ambient projective dimension (uniform-box only)");
    harness->add_option("--box", cfg.box, "coordinate box half-width");
    add_common(harness);
    harness->callback([&] { cfg.command = waring::Command::Harness; command_name = "harness"; });

    CLI11_PARSE(app, argc, argv);

    try {
        const waring::json doc = waring::run(cfg);
        std::cerr << summary_line(cfg, doc) << "\n";
        const int rc = emit(doc, out_path, command_name);
        if (rc != 0) return rc;
        if (cfg.command == waring::Command::Harness && !doc["violations"].empty()) {
            std::cerr << "invariant violation: see the counterexample dump\n";
            return 4;
        }
        return 0;
    } catch (const waring::Error& e) {
        waring::json err{{"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        waring::json err{{"error", {{"code", "E_INTERNAL"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
