// Generator assembly for every system/approximation variant: a single qubit
// in one bath, two qubits in local form (uncoupled or weakly coupled) with
// any subset of {common, local1, local2} baths, and two directly coupled
// qubits treated in the dressed eigenbasis.
#pragma once

#include "qtherm/bath.hpp"
#include "qtherm/operators.hpp"

#include <optional>
#include <vector>

namespace qtherm {

enum class Secular { Partial, Full };
enum class CoefficientScheme { Redfield, Unified };

struct ApproximationVariant {
    Secular secular = Secular::Partial;
    CoefficientScheme scheme = CoefficientScheme::Redfield;
    bool lamb_shift = true;
    // Pairs (w, w') are retained iff |w - w'| < secular_cutoff under the
    // partial secular approximation. <= 0 means the default 0.1 * omega2.
    double secular_cutoff = -1.0;
};

enum class InitialState { ExcitedExcited, PlusPlus, SingleExcited, Ground, Custom };

struct SystemSpec {
    int n_qubits = 2;
    double omega1 = 1.0;
    double omega2 = 1.0;     // ignored for one qubit; convention omega1 >= omega2
    double k = 0.0;          // qubit-qubit coupling (units of omega1)
    std::vector<BathSpec> baths;
    InitialState initial_state = InitialState::PlusPlus;
    Matrix custom_state;     // used when initial_state == Custom

    void validate() const;
    Matrix initial_density() const;
    const BathSpec* find_bath(BathLabel label) const;
};

/// One entry of the double-sum dissipator,
///   rate * ( L rho R^dagger - {R^dagger L, rho} / 2 ).
struct JumpTerm {
    double omega_left = 0.0;   // frequency of L
    double omega_right = 0.0;  // frequency of R
    Matrix op_left;
    Matrix op_right;
    Complex rate;
    BathLabel bath = BathLabel::Common;
};

struct LiouvillianModel {
    int dim = 2;
    Matrix bare_hamiltonian;
    Matrix lamb_shift;  // always stored; applied only when lamb_on
    bool lamb_on = true;
    std::vector<JumpTerm> jump_terms;
    ApproximationVariant variant;

    Matrix hamiltonian() const {
        return lamb_on ? Matrix(bare_hamiltonian + lamb_shift) : bare_hamiltonian;
    }

    /// Generator action rho -> -i[H, rho] + D[rho].
    Matrix apply(const Matrix& rho) const;
};

LiouvillianModel build_single_qubit(const SystemSpec& spec, const ApproximationVariant& variant);

/// Local-form two-qubit generator: jump operators of the uncoupled qubits,
/// full H_S (including a weak k) in the commutator. Requires k <= 0.05 * omega2.
LiouvillianModel build_two_qubit_local(const SystemSpec& spec, const ApproximationVariant& variant);

/// Global two-qubit generator: jump operators in the dressed eigenbasis of
/// the full H_S. Requires k > 0.
LiouvillianModel build_global(const SystemSpec& spec, const ApproximationVariant& variant);

/// Dispatch on qubit count and coupling strength.
LiouvillianModel build_model(const SystemSpec& spec, const ApproximationVariant& variant);

LiouvillianModel toggle_lamb_shift(LiouvillianModel model, bool on);

/// Column-stacking superoperator matrix of the generator (dim^2 x dim^2).
Matrix superop_matrix(const LiouvillianModel& model);

}  // namespace qtherm
