#include "qtherm/acceptance.hpp"
#include "qtherm/scenarios.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

namespace {

struct CommonArgs {
    std::string config;
    std::string out_dir = ".";
    std::string variant;
    bool no_lamb_shift = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("config", args.config, "scenario config file")->required();
    cmd->add_option("--out", args.out_dir, "directory for CSV output");
    cmd->add_option("--variant", args.variant, "override approximation variant")
        ->check(CLI::IsMember({"partial", "full", "unified"}));
    cmd->add_flag("--no-lamb-shift", args.no_lamb_shift, "drop the Lamb-shift Hamiltonian");
}

qtherm::ScenarioConfig load(const CommonArgs& args) {
    qtherm::ScenarioConfig cfg = qtherm::parse_config_file(args.config);
    if (args.variant == "partial") {
        cfg.variant.secular = qtherm::Secular::Partial;
        cfg.variant.scheme = qtherm::CoefficientScheme::Redfield;
    } else if (args.variant == "full") {
        cfg.variant.secular = qtherm::Secular::Full;
        cfg.variant.scheme = qtherm::CoefficientScheme::Redfield;
    } else if (args.variant == "unified") {
        cfg.variant.secular = qtherm::Secular::Partial;
        cfg.variant.scheme = qtherm::CoefficientScheme::Unified;
    }
    if (args.no_lamb_shift) cfg.variant.lamb_shift = false;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"open-system qubit thermometry simulator"};
    app.require_subcommand(1);

    CommonArgs sim_args, steady_args, heat_args;
    CLI::App* sim = app.add_subcommand("simulate", "transient QFI trajectory");
    add_common(sim, sim_args);
    CLI::App* steady = app.add_subcommand("steady", "steady-state QFI sweep");
    add_common(steady, steady_args);
    CLI::App* heat = app.add_subcommand("heatmap", "steady QFI over the local-bath grid");
    add_common(heat, heat_args);

    std::string filter;
    CLI::App* validate = app.add_subcommand("validate", "run the acceptance checks");
    validate->add_option("--filter", filter, "run only checks whose name contains this");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            auto series = qtherm::run_transient(load(sim_args), sim_args.out_dir);
            std::printf("wrote %zu samples\n", series.size());
        } else if (steady->parsed()) {
            auto points = qtherm::run_steady_sweep(load(steady_args), steady_args.out_dir);
            std::printf("wrote %zu sweep points\n", points.size());
        } else if (heat->parsed()) {
            auto res = qtherm::run_heatmap(load(heat_args), heat_args.out_dir);
            std::size_t region1 = 0;
            for (const auto& c : res.cells)
                if (c.region == 1) ++region1;
            std::printf("wrote %zu cells (%zu above the threshold %.6f)\n", res.cells.size(),
                        region1, res.threshold);
        } else if (validate->parsed()) {
            auto results = qtherm::acceptance::run_checks(filter);
            if (results.empty()) {
                std::fprintf(stderr, "no check matches filter '%s'\n", filter.c_str());
                return 1;
            }
            bool all = true;
            for (const auto& r : results) {
                std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                            r.detail.c_str());
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
