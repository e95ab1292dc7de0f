#include "qtherm/metrology.hpp"

#include "qtherm/analytic.hpp"

#include <doctest.h>

#include <cmath>

using namespace qtherm;

namespace {

SystemSpec one_qubit(double beta = 1.0, double mu_x = 0.01) {
    SystemSpec s;
    s.n_qubits = 1;
    s.initial_state = InitialState::Ground;
    BathSpec b;
    b.beta = beta;
    b.mu_x = mu_x;
    s.baths.push_back(b);
    return s;
}

}  // namespace

TEST_CASE("QFI of a diagonal qubit family") {
    // rho = diag(p, 1-p): F = p'^2 (1/p + 1/(1-p))
    double p = 0.3, dp = 0.17;
    Matrix rho = Matrix::Zero(2, 2), drho = Matrix::Zero(2, 2);
    rho(0, 0) = p;
    rho(1, 1) = 1.0 - p;
    drho(0, 0) = dp;
    drho(1, 1) = -dp;
    double expected = dp * dp * (1.0 / p + 1.0 / (1.0 - p));
    CHECK(qfi(rho, drho) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(qfi_spectral(rho, drho) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("determinant shortcut agrees with the spectral sum") {
    Matrix rho(2, 2), drho(2, 2);
    rho << 0.62, Complex(0.1, -0.07), Complex(0.1, 0.07), 0.38;
    drho << 0.21, Complex(-0.03, 0.11), Complex(-0.03, -0.11), -0.21;
    double a = qfi(rho, drho), b = qfi_spectral(rho, drho);
    CHECK(std::abs(a - b) < 1e-10 * b);
}

TEST_CASE("singular states fall back to the spectral form") {
    Matrix rho = Matrix::Zero(2, 2), drho = Matrix::Zero(2, 2);
    rho(0, 0) = 1.0;  // pure state, det = 0
    drho(0, 0) = 0.4;
    drho(1, 1) = -0.4;
    CHECK(qfi(rho, drho) == doctest::Approx(qfi_spectral(rho, drho)));
}

TEST_CASE("temperature rescaling") {
    CHECK(qfi_wrt_temperature(0.5, 2.0) == doctest::Approx(8.0));
}

TEST_CASE("stationary QFI matches the closed form") {
    for (double beta : {0.1, 1.0}) {
        QfiSample s = steady_qfi_numeric(one_qubit(beta), {}, BathLabel::Common, 0);
        CHECK(std::abs(s.qfi_beta - steady_qfi(1.0, beta)) < 1e-6);
        CHECK(s.richardson_residual < 1e-6);
        CHECK(s.qfi_temperature == doctest::Approx(s.qfi_beta * std::pow(beta, 4)));
    }
}

TEST_CASE("transient pipeline matches the closed form") {
    SystemSpec s = one_qubit(1.0, 0.02);
    AnalyticParams ap;
    ap.mu_x = 0.02;
    std::vector<double> ts = {50.0, 200.0, 800.0, 3000.0};
    auto samples = qfi_trajectory(s, {}, BathLabel::Common, ts, 0, {}, {}, Propagator::Spectral);
    double sup = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        sup = std::max(sup, std::abs(samples[i].qfi_beta - analytic_qfi(ap, ts[i])));
        ref = std::max(ref, analytic_qfi(ap, ts[i]));
    }
    CHECK(sup / ref < 1e-5);
}

TEST_CASE("reduced-state QFI never exceeds the full-state QFI") {
    SystemSpec s;
    s.omega2 = 0.99;
    BathSpec b;
    b.beta = 1.0;
    b.mu_x = 0.01;
    s.baths.push_back(b);
    std::vector<double> ts = {100.0, 1000.0, 10000.0};
    auto full = qfi_trajectory(s, {}, BathLabel::Common, ts, 0, {}, {}, Propagator::Spectral);
    auto red = qfi_trajectory(s, {}, BathLabel::Common, ts, 1, {}, {}, Propagator::Spectral);
    for (std::size_t i = 0; i < ts.size(); ++i)
        CHECK(red[i].qfi_beta <= full[i].qfi_beta + 1e-9);
}

TEST_CASE("target bath must exist") {
    SystemSpec s = one_qubit();
    CHECK_THROWS_AS(steady_qfi_numeric(s, {}, BathLabel::Local1, 0), std::invalid_argument);
    CHECK_THROWS_AS(qfi_trajectory(s, {}, BathLabel::Common, {1.0}, 2), std::invalid_argument);
}
