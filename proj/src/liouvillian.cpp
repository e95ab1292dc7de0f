#include "qtherm/liouvillian.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qtherm {
namespace {

// Frequencies coming out of the eigendecomposition can differ in the last
// few bits between otherwise identical transitions; snap them so that the
// rate cache and the full-secular comparison see one value per transition.
double round12(double x) { return std::round(x * 1e12) / 1e12; }

struct Channel {
    double mu;
    double omega;
    Matrix op;
};

// Operators a given bath couples to, with their coupling strengths.
std::vector<std::pair<double, Matrix>> bath_couplings(const BathSpec& bath, int n_qubits) {
    std::vector<std::pair<double, Matrix>> ops;
    auto push_qubit = [&](int q) {
        Matrix sx = pauli_x(), sz = pauli_z(), id = identity(2);
        Matrix x = (n_qubits == 1) ? sx : (q == 1 ? tensor(sx, id) : tensor(id, sx));
        Matrix z = (n_qubits == 1) ? sz : (q == 1 ? tensor(sz, id) : tensor(id, sz));
        if (bath.mu_x != 0.0) ops.emplace_back(bath.mu_x, x);
        if (bath.mu_z != 0.0) ops.emplace_back(bath.mu_z, z);
    };
    if (n_qubits == 1) {
        push_qubit(1);
    } else {
        switch (bath.label) {
            case BathLabel::Common:
                push_qubit(1);
                push_qubit(2);
                break;
            case BathLabel::Local1: push_qubit(1); break;
            case BathLabel::Local2: push_qubit(2); break;
        }
    }
    return ops;
}

// Core of every builder: decompose each coupling operator into jump
// components of H_jump, then run the double sum over retained (w, w') pairs
// within each bath.
LiouvillianModel assemble(const Matrix& h_system, const Matrix& h_jump,
                          const std::vector<BathSpec>& baths, int n_qubits,
                          ApproximationVariant variant, double omega_ref) {
    double cutoff = variant.secular_cutoff > 0.0 ? variant.secular_cutoff : 0.1 * omega_ref;

    LiouvillianModel model;
    model.dim = static_cast<int>(h_system.rows());
    model.bare_hamiltonian = h_system;
    model.lamb_shift = Matrix::Zero(model.dim, model.dim);
    model.lamb_on = variant.lamb_shift;
    model.variant = variant;

    for (const BathSpec& bath : baths) {
        bath.validate();
        std::vector<Channel> chans;
        for (const auto& [mu, op] : bath_couplings(bath, n_qubits)) {
            for (const JumpComponent& jc : jump_decompose(h_jump, op))
                chans.push_back({mu, round12(jc.omega), jc.op});
        }
        for (const Channel& left : chans) {
            for (const Channel& right : chans) {
                double dw = std::abs(left.omega - right.omega);
                if (variant.secular == Secular::Full ? dw > 1e-12 : dw >= cutoff) continue;

                Complex g_l = half_fourier(left.omega, bath.beta, bath.spectral).value();
                Complex g_r = half_fourier(right.omega, bath.beta, bath.spectral).value();
                Complex rate;
                if (variant.scheme == CoefficientScheme::Redfield) {
                    rate = left.mu * right.mu * (g_l + std::conj(g_r));
                } else {
                    double wbar = round12(0.5 * (left.omega + right.omega));
                    rate = left.mu * right.mu * 2.0 *
                           std::real(half_fourier(wbar, bath.beta, bath.spectral).value());
                }
                Complex s_coef = left.mu * right.mu * (g_l - std::conj(g_r)) / Complex(0.0, 2.0);

                JumpTerm term;
                term.omega_left = left.omega;
                term.omega_right = right.omega;
                term.op_left = left.op;
                term.op_right = right.op;
                term.rate = rate;
                term.bath = bath.label;
                model.jump_terms.push_back(std::move(term));

                model.lamb_shift += s_coef * (right.op.adjoint() * left.op);
            }
        }
    }
    // Numerical junk in the anti-Hermitian part only; keep H_LS Hermitian.
    model.lamb_shift = 0.5 * (model.lamb_shift + Matrix(model.lamb_shift.adjoint()));
    return model;
}

}  // namespace

void SystemSpec::validate() const {
    if (n_qubits != 1 && n_qubits != 2) throw std::invalid_argument("n_qubits must be 1 or 2");
    if (omega1 <= 0.0) throw std::invalid_argument("omega1 must be positive");
    if (n_qubits == 2 && omega2 <= 0.0) throw std::invalid_argument("omega2 must be positive");
    if (k < 0.0) throw std::invalid_argument("coupling k must be non-negative");
    if (baths.empty()) throw std::invalid_argument("at least one bath is required");
    for (const BathSpec& b : baths) {
        b.validate();
        if (n_qubits == 1 && b.label != BathLabel::Common)
            throw std::invalid_argument("single-qubit systems take a common bath only");
    }
    if (initial_state == InitialState::Custom) {
        int d = n_qubits == 1 ? 2 : 4;
        if (custom_state.rows() != d || custom_state.cols() != d)
            throw std::invalid_argument("custom state has wrong dimension");
        validate_density(custom_state);
    }
}

Matrix SystemSpec::initial_density() const {
    Matrix exc(2, 2), gnd(2, 2), plus(2, 2);
    exc << 1, 0, 0, 0;
    gnd << 0, 0, 0, 1;
    plus << 0.5, 0.5, 0.5, 0.5;
    if (n_qubits == 1) {
        switch (initial_state) {
            case InitialState::ExcitedExcited: return exc;
            case InitialState::PlusPlus: return plus;
            case InitialState::SingleExcited: return exc;
            case InitialState::Ground: return gnd;
            case InitialState::Custom: return custom_state;
        }
    }
    switch (initial_state) {
        case InitialState::ExcitedExcited: return tensor(exc, exc);
        case InitialState::PlusPlus: return tensor(plus, plus);
        case InitialState::SingleExcited: return tensor(exc, gnd);
        case InitialState::Ground: return tensor(gnd, gnd);
        case InitialState::Custom: return custom_state;
    }
    throw std::logic_error("unreachable");
}

const BathSpec* SystemSpec::find_bath(BathLabel label) const {
    for (const BathSpec& b : baths)
        if (b.label == label) return &b;
    return nullptr;
}

Matrix LiouvillianModel::apply(const Matrix& rho) const {
    Matrix h = hamiltonian();
    Matrix out = Complex(0.0, -1.0) * (h * rho - rho * h);
    for (const JumpTerm& t : jump_terms) {
        Matrix rdl = t.op_right.adjoint() * t.op_left;
        out += t.rate * (t.op_left * rho * t.op_right.adjoint() -
                         0.5 * (rdl * rho + rho * rdl));
    }
    return out;
}

LiouvillianModel build_single_qubit(const SystemSpec& spec, const ApproximationVariant& variant) {
    spec.validate();
    if (spec.n_qubits != 1) throw std::invalid_argument("spec is not single-qubit");
    Matrix h = 0.5 * spec.omega1 * pauli_z();
    return assemble(h, h, spec.baths, 1, variant, spec.omega1);
}

LiouvillianModel build_two_qubit_local(const SystemSpec& spec,
                                       const ApproximationVariant& variant) {
    spec.validate();
    if (spec.n_qubits != 2) throw std::invalid_argument("spec is not two-qubit");
    if (spec.k > 0.05 * spec.omega2)
        throw std::invalid_argument("local form requires k <= 0.05 * omega2");
    Matrix sz = pauli_z(), id = identity(2);
    Matrix h0 = 0.5 * spec.omega1 * tensor(sz, id) + 0.5 * spec.omega2 * tensor(id, sz);
    Matrix h = h0;
    if (spec.k != 0.0) h += spec.k * tensor(pauli_x(), pauli_x());
    return assemble(h, h0, spec.baths, 2, variant, spec.omega2);
}

LiouvillianModel build_global(const SystemSpec& spec, const ApproximationVariant& variant) {
    spec.validate();
    if (spec.n_qubits != 2) throw std::invalid_argument("spec is not two-qubit");
    if (spec.k <= 0.0) throw std::invalid_argument("global form requires k > 0");
    Matrix sz = pauli_z(), id = identity(2);
    Matrix h = 0.5 * spec.omega1 * tensor(sz, id) + 0.5 * spec.omega2 * tensor(id, sz) +
               spec.k * tensor(pauli_x(), pauli_x());
    return assemble(h, h, spec.baths, 2, variant, spec.omega2);
}

LiouvillianModel build_model(const SystemSpec& spec, const ApproximationVariant& variant) {
    if (spec.n_qubits == 1) return build_single_qubit(spec, variant);
    if (spec.k <= 0.05 * spec.omega2) return build_two_qubit_local(spec, variant);
    return build_global(spec, variant);
}

LiouvillianModel toggle_lamb_shift(LiouvillianModel model, bool on) {
    model.lamb_on = on;
    return model;
}

Matrix superop_matrix(const LiouvillianModel& model) {
    int d = model.dim;
    Matrix id = identity(d);
    Matrix h = model.hamiltonian();
    Matrix sup = Complex(0.0, -1.0) * (tensor(id, h) - tensor(h.transpose(), id));
    for (const JumpTerm& t : model.jump_terms) {
        Matrix rdl = t.op_right.adjoint() * t.op_left;
        sup += t.rate * (tensor(t.op_right.conjugate(), t.op_left) -
                         0.5 * tensor(id, rdl) - 0.5 * tensor(rdl.transpose(), id));
    }
    return sup;
}

}  // namespace qtherm
