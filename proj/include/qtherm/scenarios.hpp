#pragma once

#include "qtherm/config.hpp"
#include "qtherm/metrology.hpp"

#include <string>
#include <vector>

namespace qtherm {

struct SteadyPoint {
    double beta = 0.0;
    double qfi_beta = 0.0;
    double qfi_temperature = 0.0;
    double rel_error = 0.0;
};

struct HeatmapCell {
    double beta_l1 = 0.0;
    double beta_l2 = 0.0;
    double qfi_beta = 0.0;
    // Region I: above the no-local-bath steady value; Region II: below.
    int region = 2;
};

struct HeatmapResult {
    std::vector<HeatmapCell> cells;  // row-major over (axis1, axis2)
    double threshold = 0.0;
};

/// Transient QFI run; writes <prefix>_transient.csv when out_dir is non-empty.
std::vector<QfiSample> run_transient(const ScenarioConfig& cfg, const std::string& out_dir);

/// Steady-state QFI sweep over the target bath's beta;
/// writes <prefix>_steady.csv.
std::vector<SteadyPoint> run_steady_sweep(const ScenarioConfig& cfg, const std::string& out_dir);

/// Steady-state QFI for the common-bath beta over the (beta_l1, beta_l2)
/// grid; writes <prefix>_heatmap.csv with the region classification.
HeatmapResult run_heatmap(const ScenarioConfig& cfg, const std::string& out_dir);

}  // namespace qtherm
