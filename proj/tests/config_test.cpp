#include "qtherm/config.hpp"

#include <doctest.h>

using namespace qtherm;

namespace {
const char* kSample = R"(
# remote sensing setup
system.n_qubits = 2
system.omega1 = 1.0
system.omega2 = 0.99      # detuning 0.01
bath.common.beta = 1.0
bath.common.mu_x = 0.01
bath.local1.beta = 0.1
bath.local2.beta = 1.0
target.bath = local1
target.probe = 2
grid.t_end = 40000
grid.n_points = 161
)";
}

TEST_CASE("parse a full scenario") {
    ScenarioConfig cfg = parse_config_text(kSample);
    CHECK(cfg.system.n_qubits == 2);
    CHECK(cfg.system.omega2 == 0.99);
    REQUIRE(cfg.system.baths.size() == 3);
    CHECK(cfg.system.find_bath(BathLabel::Local1)->beta == 0.1);
    CHECK(cfg.system.find_bath(BathLabel::Local1)->mu_x == 0.01);  // default
    CHECK(cfg.target.bath == BathLabel::Local1);
    CHECK(cfg.target.probe == 2);
    CHECK(cfg.grid.t_end == 40000);
    CHECK(cfg.variant.secular == Secular::Partial);  // default
    CHECK(cfg.variant.lamb_shift);
}

TEST_CASE("unknown and malformed keys are rejected") {
    CHECK_THROWS_WITH_AS(parse_config_text("system.omega3 = 1\nbath.common.beta = 1\n"),
                         doctest::Contains("unknown config key"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("bath.common.beta = 1\nbath.common.beta = 2\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("bath.common.beta = abc\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("bath.common.beta\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("variant.secular = sometimes\nbath.common.beta = 1\n"),
                    std::invalid_argument);
}

TEST_CASE("target bath must be present") {
    CHECK_THROWS_AS(parse_config_text("bath.common.beta = 1\ntarget.bath = local1\n"),
                    std::invalid_argument);
}

TEST_CASE("variant and state enums") {
    ScenarioConfig cfg = parse_config_text(
        "bath.common.beta = 1\nvariant.secular = full\nvariant.scheme = unified\n"
        "variant.lamb_shift = false\nsystem.initial_state = ground\nsystem.n_qubits = 1\n");
    CHECK(cfg.variant.secular == Secular::Full);
    CHECK(cfg.variant.scheme == CoefficientScheme::Unified);
    CHECK_FALSE(cfg.variant.lamb_shift);
    CHECK(cfg.system.initial_state == InitialState::Ground);
}

TEST_CASE("sweep ranges") {
    SweepRange lin{1.0, 3.0, 3, false};
    CHECK(lin.values() == std::vector<double>{1.0, 2.0, 3.0});
    SweepRange lg{0.25, 4.0, 3, true};
    auto v = lg.values();
    CHECK(v[1] == doctest::Approx(1.0));
    SweepRange bad{-1.0, 4.0, 3, true};
    CHECK_THROWS_AS(bad.values(), std::invalid_argument);

    ScenarioConfig cfg = parse_config_text(
        "bath.common.beta = 1\nsweep.min = 0.5\nsweep.max = 2\nsweep.n = 4\n"
        "sweep.spacing = linear\n");
    CHECK(cfg.sweep.n == 4);
    CHECK_FALSE(cfg.sweep.log_spaced);
}
