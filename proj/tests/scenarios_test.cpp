#include "qtherm/scenarios.hpp"

#include "qtherm/analytic.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qtherm;

namespace {

std::string out_dir() {
    auto p = std::filesystem::temp_directory_path() / "qtherm_scenario_tests";
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

ScenarioConfig single_qubit_cfg() {
    return parse_config_text(
        "system.n_qubits = 1\n"
        "system.initial_state = ground\n"
        "bath.common.beta = 1.0\n"
        "bath.common.mu_x = 0.02\n"
        "grid.t_end = 2000\n"
        "grid.n_points = 9\n"
        "output.prefix = sq\n");
}

}  // namespace

TEST_CASE("transient run emits consistent CSV") {
    ScenarioConfig cfg = single_qubit_cfg();
    auto series = run_transient(cfg, out_dir());
    REQUIRE(series.size() == 9);

    std::string csv = slurp(out_dir() + "/sq_transient.csv");
    CHECK(csv.rfind("t,qfi_beta,qfi_T,trace_err,min_eig\n", 0) == 0);

    AnalyticParams ap;
    ap.mu_x = 0.02;
    double beta = 1.0;
    for (const QfiSample& s : series) {
        CHECK(s.qfi_beta >= 0.0);
        CHECK(s.qfi_temperature == doctest::Approx(s.qfi_beta * std::pow(beta, 4)));
        CHECK(std::abs(s.qfi_beta - analytic_qfi(ap, s.t)) < 1e-4);
    }
}

TEST_CASE("reruns are bit-identical") {
    ScenarioConfig cfg = single_qubit_cfg();
    run_transient(cfg, out_dir());
    std::string first = slurp(out_dir() + "/sq_transient.csv");
    run_transient(cfg, out_dir());
    CHECK(first == slurp(out_dir() + "/sq_transient.csv"));
}

TEST_CASE("steady sweep reduces to the closed form for a single qubit") {
    ScenarioConfig cfg = parse_config_text(
        "system.n_qubits = 1\n"
        "system.initial_state = ground\n"
        "bath.common.beta = 1.0\n"
        "bath.common.mu_x = 0.01\n"
        "sweep.min = 0.5\nsweep.max = 2.0\nsweep.n = 3\nsweep.spacing = log\n"
        "output.prefix = sweep\n");
    auto points = run_steady_sweep(cfg, out_dir());
    REQUIRE(points.size() == 3);
    for (const SteadyPoint& p : points) {
        double f = steady_qfi(1.0, p.beta);
        CHECK(std::abs(p.qfi_beta - f) < 1e-4 * f);
        CHECK(p.rel_error == doctest::Approx(relative_error(p.beta, p.qfi_beta)));
    }
    CHECK(std::filesystem::exists(out_dir() + "/sweep_steady.csv"));
}

TEST_CASE("heatmap classifies the corner cells") {
    ScenarioConfig cfg = parse_config_text(
        "system.omega2 = 0.99\n"
        "bath.common.beta = 1.0\n"
        "bath.local1.beta = 1.0\n"
        "bath.local2.beta = 1.0\n"
        "target.probe = 1\n"
        "heatmap.axis1.min = 0.5\nheatmap.axis1.max = 5\nheatmap.axis1.n = 2\n"
        "heatmap.axis2.min = 0.5\nheatmap.axis2.max = 5\nheatmap.axis2.n = 2\n"
        "output.prefix = hm\n");
    HeatmapResult res = run_heatmap(cfg, out_dir());
    REQUIRE(res.cells.size() == 4);
    CHECK(res.threshold == doctest::Approx(steady_qfi(1.0, 1.0)));
    for (const HeatmapCell& c : res.cells) {
        if (c.beta_l1 == 5.0 && c.beta_l2 == 5.0) CHECK(c.region == 1);
        if (c.beta_l1 == 0.5 && c.beta_l2 == 0.5) CHECK(c.region == 2);
    }
    std::string csv = slurp(out_dir() + "/hm_heatmap.csv");
    CHECK(csv.rfind("beta_l1,beta_l2,qfi_beta,region\n", 0) == 0);
}

TEST_CASE("near-symmetric bath swap barely moves the heatmap value") {
    // relabeling the qubits (swap the splittings, the local baths and the
    // probe) is an exact symmetry of the model; this pins the tensor ordering
    auto value = [&](double w1, double w2, double b1, double b2, int probe) {
        ScenarioConfig cfg = parse_config_text(
            "system.omega1 = " + std::to_string(w1) + "\n" +
            "system.omega2 = " + std::to_string(w2) + "\n" +
            "bath.common.beta = 1.0\n"
            "bath.local1.beta = " + std::to_string(b1) + "\n" +
            "bath.local2.beta = " + std::to_string(b2) + "\n" +
            "target.probe = " + std::to_string(probe) + "\n" +
            "heatmap.axis1.n = 1\nheatmap.axis1.min = " + std::to_string(b1) + "\n" +
            "heatmap.axis2.n = 1\nheatmap.axis2.min = " + std::to_string(b2) + "\n");
        return run_heatmap(cfg, "").cells[0].qfi_beta;
    };
    double a = value(1.0, 0.999, 0.5, 2.0, 1), b = value(0.999, 1.0, 2.0, 0.5, 2);
    CHECK(std::abs(a - b) / a < 1e-6);
}
