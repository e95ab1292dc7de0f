// Dense complex linear algebra on small Hilbert spaces: Pauli algebra,
// tensor products, partial trace and eigenbasis jump-operator decomposition.
//
// Basis convention: sigma_z = diag(+1, -1) and the first basis vector is the
// higher-energy (excited) state of H = w sigma_z / 2 with w > 0. The
// two-qubit product basis is ordered {|00>, |01>, |10>, |11>} with qubit 1
// as the left tensor factor.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qtherm {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix sigma_plus();   // |excited><ground|
Matrix sigma_minus();  // |ground><excited|
Matrix identity(int dim);

/// Kronecker product, a on the left factor.
Matrix tensor(const Matrix& a, const Matrix& b);

double hermiticity_error(const Matrix& m);
double min_eigenvalue(const Matrix& hermitian);

/// Throws std::invalid_argument unless rho is Hermitian, unit-trace and has
/// eigenvalues >= -eig_tol.
void validate_density(const Matrix& rho, double eig_tol = 1e-9);

/// Reduced state of one qubit of a two-qubit density matrix. keep is 1 or 2.
Matrix partial_trace(const Matrix& rho, int keep);

/// One frequency component of a coupling operator in the eigenbasis of the
/// system Hamiltonian: A(w) = sum_{Em - En = w} |n><n| A |m><m|.
struct JumpComponent {
    double omega;
    Matrix op;
};

/// Eigenbasis decomposition of a coupling operator A with respect to a
/// Hermitian H. Gaps equal within 1e-10 * max|E| are merged; components are
/// sorted by ascending frequency and satisfy A(-w) = A(w)^dagger and
/// sum_w A(w) = A.
std::vector<JumpComponent> jump_decompose(const Matrix& hamiltonian, const Matrix& coupling);

}  // namespace qtherm
