#include "qtherm/analytic.hpp"

#include "qtherm/dynamics.hpp"

#include <doctest.h>

#include <cmath>

using namespace qtherm;

TEST_CASE("closed-form state") {
    AnalyticParams p;  // omega = beta = 1, mu_x = 0.01
    Matrix r0 = analytic_state(p, 0.0);
    CHECK(r0(0, 0).real() == 0.0);
    CHECK(r0(1, 1).real() == 1.0);
    // long-time populations are Gibbs
    Matrix rs = analytic_state(p, 1e7);
    double pg = std::exp(-1.0) / (1.0 + std::exp(-1.0));
    CHECK(rs(0, 0).real() == doctest::Approx(pg).epsilon(1e-12));
    CHECK_THROWS_AS(analytic_state(p, -1.0), std::invalid_argument);
}

TEST_CASE("state satisfies the rate equation") {
    AnalyticParams p;
    p.mu_x = 0.02;
    SystemSpec s;
    s.n_qubits = 1;
    s.initial_state = InitialState::Ground;
    BathSpec b;
    b.beta = 1.0;
    b.mu_x = 0.02;
    s.baths.push_back(b);
    LiouvillianModel m = build_model(s, {});
    double dt = 1e-4;
    for (double t : {10.0, 100.0, 1000.0}) {
        Matrix lhs = (analytic_state(p, t + dt) - analytic_state(p, t - dt)) / (2.0 * dt);
        Matrix rhs = m.apply(analytic_state(p, t));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("transient QFI frozen values") {
    AnalyticParams p;
    CHECK(analytic_qfi(p, 100.0) == doctest::Approx(0.0821909235918553).epsilon(1e-12));
    CHECK(analytic_qfi(p, 1000.0) == doctest::Approx(0.319411718582034).epsilon(1e-12));
    AnalyticParams strong;
    strong.mu_x = 0.03;
    CHECK(analytic_qfi(strong, 300.0) == doctest::Approx(0.234808376080279).epsilon(1e-12));
    CHECK(analytic_qfi(p, 0.0) == 0.0);
}

TEST_CASE("QFI approaches the stationary value") {
    AnalyticParams p;
    double rate = 2.0 * p.rate_scale() / std::tanh(0.5);
    double f = analytic_qfi(p, 20.0 / rate);
    CHECK(std::abs(f - steady_qfi(1.0, 1.0)) < 1e-4 * steady_qfi(1.0, 1.0));
}

TEST_CASE("stationary QFI") {
    CHECK(steady_qfi(1.0, 0.1) == doctest::Approx(0.249376040192892).epsilon(1e-12));
    CHECK(steady_qfi(1.0, 1.0) == doctest::Approx(0.196611933241482).epsilon(1e-12));
    CHECK(steady_qfi(1.0, 1e5) == 0.0);  // overflow-safe tail
    CHECK_THROWS_AS(steady_qfi(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("stronger dissipation thermalizes sooner") {
    auto settle_time = [](double mu) {
        AnalyticParams p;
        p.mu_x = mu;
        double target = steady_qfi(1.0, 1.0);
        for (double t = 10.0; t < 1e7; t *= 1.05)
            if (std::abs(analytic_qfi(p, t) - target) < 0.01 * target) return t;
        return 1e7;
    };
    CHECK(settle_time(0.03) < settle_time(0.01));
}

TEST_CASE("relative error") {
    CHECK(relative_error(2.0, 0.25) == doctest::Approx(1.0));
    CHECK(std::isinf(relative_error(1.0, 0.0)));
    CHECK_THROWS_AS(relative_error(0.0, 0.1), std::invalid_argument);
}
