#include "qtherm/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtherm {

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix sigma_plus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

Matrix sigma_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double hermiticity_error(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

void validate_density(const Matrix& rho, double eig_tol) {
    if (rho.rows() != rho.cols())
        throw std::invalid_argument("density matrix must be square");
    if (hermiticity_error(rho) > 1e-10)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0)) > 1e-10)
        throw std::invalid_argument("density matrix trace differs from 1");
    if (min_eigenvalue(0.5 * (rho + rho.adjoint())) < -eig_tol)
        throw std::invalid_argument("density matrix has a negative eigenvalue");
}

Matrix partial_trace(const Matrix& rho, int keep) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("partial_trace expects a two-qubit state");
    if (keep != 1 && keep != 2)
        throw std::invalid_argument("partial_trace: keep must be 1 or 2");
    Matrix out = Matrix::Zero(2, 2);
    // index (i, j) of the product basis is 2*i + j with i = qubit 1
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int t = 0; t < 2; ++t) {
                if (keep == 1)
                    out(a, b) += rho(2 * a + t, 2 * b + t);
                else
                    out(a, b) += rho(2 * t + a, 2 * t + b);
            }
    return out;
}

std::vector<JumpComponent> jump_decompose(const Matrix& hamiltonian, const Matrix& coupling) {
    if (hermiticity_error(hamiltonian) > 1e-10)
        throw std::invalid_argument("jump_decompose: Hamiltonian must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("jump_decompose: eigensolver failed");
    const auto& energies = es.eigenvalues();
    const Matrix& vecs = es.eigenvectors();
    const int dim = static_cast<int>(hamiltonian.rows());
    const double gap_tol = 1e-10 * std::max(1.0, energies.cwiseAbs().maxCoeff());

    std::vector<JumpComponent> parts;
    for (int m = 0; m < dim; ++m) {
        for (int n = 0; n < dim; ++n) {
            const double w = energies(m) - energies(n);
            Matrix piece = vecs.col(n) * (vecs.col(n).adjoint() * coupling * vecs.col(m)) *
                           vecs.col(m).adjoint();
            auto it = std::find_if(parts.begin(), parts.end(), [&](const JumpComponent& c) {
                return std::abs(c.omega - w) < gap_tol;
            });
            if (it == parts.end())
                parts.push_back({w, piece});
            else
                it->op += piece;
        }
    }
    std::erase_if(parts, [](const JumpComponent& c) {
        return c.op.cwiseAbs().maxCoeff() < 1e-14;
    });
    std::sort(parts.begin(), parts.end(),
              [](const JumpComponent& a, const JumpComponent& b) { return a.omega < b.omega; });
    return parts;
}

}  // namespace qtherm
