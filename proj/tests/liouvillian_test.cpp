#include "qtherm/liouvillian.hpp"

#include <doctest.h>

#include <cmath>

using namespace qtherm;

namespace {

SystemSpec one_qubit(double beta = 1.0, double mu_x = 0.01, double mu_z = 0.0) {
    SystemSpec s;
    s.n_qubits = 1;
    s.initial_state = InitialState::Ground;
    BathSpec b;
    b.beta = beta;
    b.mu_x = mu_x;
    b.mu_z = mu_z;
    s.baths.push_back(b);
    return s;
}

SystemSpec common_bath_pair(double detuning, double k = 0.0) {
    SystemSpec s;
    s.omega2 = 1.0 - detuning;
    s.k = k;
    BathSpec b;
    b.beta = 1.0;
    b.mu_x = 0.01;
    s.baths.push_back(b);
    return s;
}

}  // namespace

TEST_CASE("single-qubit generator structure") {
    LiouvillianModel m = build_single_qubit(one_qubit(), {});
    CHECK(m.dim == 2);
    // sigma_x coupling, frequencies +-w, detuning 2w >> cutoff: diagonal pairs only
    REQUIRE(m.jump_terms.size() == 2);
    for (const JumpTerm& t : m.jump_terms) {
        CHECK(t.omega_left == t.omega_right);
        CHECK(std::abs(t.rate.imag()) < 1e-14);
    }
    // emission rate exceeds absorption at finite temperature
    double down = 0.0, up = 0.0;
    for (const JumpTerm& t : m.jump_terms)
        (t.omega_left > 0 ? down : up) = t.rate.real();
    CHECK(down > up);
    CHECK(down / up == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
    CHECK(hermiticity_error(m.lamb_shift) < 1e-14);
}

TEST_CASE("generator preserves trace and hermiticity") {
    LiouvillianModel m = build_single_qubit(one_qubit(1.0, 0.05, 0.02), {});
    Matrix rho(2, 2);
    rho << 0.6, Complex(0.1, 0.3), Complex(0.1, -0.3), 0.4;
    Matrix d = m.apply(rho);
    CHECK(std::abs(d.trace()) < 1e-14);
    CHECK(hermiticity_error(d) < 1e-14);
}

TEST_CASE("superoperator matrix matches direct application") {
    SystemSpec s = common_bath_pair(0.01);
    LiouvillianModel m = build_two_qubit_local(s, {});
    Matrix rho = s.initial_density();
    Matrix direct = m.apply(rho);
    Matrix sup = superop_matrix(m);
    Eigen::Map<const Vector> v(rho.data(), 16);
    Vector w = sup * v;
    Eigen::Map<const Matrix> back(w.data(), 4, 4);
    CHECK((direct - back).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("lamb-shift toggle") {
    LiouvillianModel m = build_single_qubit(one_qubit(), {});
    Matrix with = m.hamiltonian();
    LiouvillianModel off = toggle_lamb_shift(m, false);
    Matrix without = off.hamiltonian();
    CHECK((with - without - m.lamb_shift).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(m.lamb_shift.cwiseAbs().maxCoeff() > 1e-6);  // 0.01^2 * O(3)
}

TEST_CASE("partial secular retention depends on the detuning") {
    // detuning 0.5 >= cutoff 0.1 * omega2: no cross terms between the qubits
    LiouvillianModel wide = build_two_qubit_local(common_bath_pair(0.5), {});
    // detuning 0.01 < cutoff: cross terms retained
    LiouvillianModel narrow = build_two_qubit_local(common_bath_pair(0.01), {});
    CHECK(narrow.jump_terms.size() > wide.jump_terms.size());

    ApproximationVariant full{Secular::Full, CoefficientScheme::Redfield, true, -1.0};
    LiouvillianModel strict = build_two_qubit_local(common_bath_pair(0.01), full);
    CHECK(strict.jump_terms.size() == wide.jump_terms.size());
}

TEST_CASE("unified coefficients form a consistent positive matrix at resonance") {
    LiouvillianModel m = build_two_qubit_local(
        common_bath_pair(0.0), {Secular::Partial, CoefficientScheme::Unified, true, -1.0});
    // at zero detuning the cross rate is the geometric mean of the diagonals:
    // |g12|^2 = g11 g22 exactly, since all three evaluate gamma at the same
    // frequency
    double g11 = 0.0, g22 = 0.0, g12 = 0.0;
    for (const JumpTerm& t : m.jump_terms) {
        if (t.omega_left != 1.0 || t.omega_right != 1.0) continue;
        bool left_q1 = t.op_left.cwiseAbs()(2, 0) > 0.5;  // acts on qubit 1
        bool right_q1 = t.op_right.cwiseAbs()(2, 0) > 0.5;
        if (left_q1 && right_q1) g11 = t.rate.real();
        else if (!left_q1 && !right_q1) g22 = t.rate.real();
        else g12 = t.rate.real();
    }
    REQUIRE(g11 > 0.0);
    CHECK(std::abs(g12 * g12 - g11 * g22) < 1e-10 * g11 * g22);
}

TEST_CASE("builder guards") {
    SystemSpec s = common_bath_pair(0.01, 0.2);
    CHECK_THROWS_AS(build_two_qubit_local(s, {}), std::invalid_argument);
    SystemSpec uncoupled = common_bath_pair(0.01, 0.0);
    CHECK_THROWS_AS(build_global(uncoupled, {}), std::invalid_argument);
    SystemSpec empty;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
    SystemSpec one = one_qubit();
    one.baths[0].label = BathLabel::Local1;
    CHECK_THROWS_AS(build_single_qubit(one, {}), std::invalid_argument);
}

TEST_CASE("dispatch picks local vs global form") {
    LiouvillianModel weak = build_model(common_bath_pair(0.01, 0.01), {});
    // local form keeps bare single-qubit frequencies
    for (const JumpTerm& t : weak.jump_terms)
        CHECK(std::min(std::abs(std::abs(t.omega_left) - 1.0),
                       std::abs(std::abs(t.omega_left) - 0.99)) < 1e-9);
    LiouvillianModel strong = build_model(common_bath_pair(0.01, 0.1), {});
    // global form works in the dressed basis: frequencies move off +-w_i
    bool dressed = false;
    for (const JumpTerm& t : strong.jump_terms)
        if (std::min(std::abs(std::abs(t.omega_left) - 1.0),
                     std::abs(std::abs(t.omega_left) - 0.99)) > 1e-4)
            dressed = true;
    CHECK(dressed);
}
