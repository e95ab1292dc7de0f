// Flat key-value scenario files: `section.key = value`, '#' comments,
// unknown keys rejected. See configs/ for the schema in use.
#pragma once

#include "qtherm/dynamics.hpp"

#include <string>

namespace qtherm {

struct EstimationTarget {
    BathLabel bath = BathLabel::Common;
    int probe = 0;  // 0 = full state, 1/2 = reduced qubit
};

struct SweepRange {
    double lo = 0.25;
    double hi = 8.0;
    int n = 21;
    bool log_spaced = true;

    std::vector<double> values() const;
};

struct ScenarioConfig {
    SystemSpec system;
    ApproximationVariant variant;
    EstimationTarget target;
    TimeGrid grid;
    SweepRange sweep;       // steady sweep over the target bath's beta
    SweepRange heat_axis1;  // local-bath-1 beta axis of the heatmap
    SweepRange heat_axis2;
    std::string output_prefix = "run";

    void validate() const;
};

ScenarioConfig parse_config_file(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text);

}  // namespace qtherm
