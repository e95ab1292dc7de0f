#include "qtherm/metrology.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace qtherm {
namespace {

double clip_qfi(double f) {
    if (f < -1e-12) throw std::runtime_error("QFI came out negative beyond tolerance");
    return f < 0.0 ? 0.0 : f;
}

SystemSpec with_target_beta(SystemSpec spec, BathLabel target, double beta) {
    bool found = false;
    for (BathSpec& b : spec.baths) {
        if (b.label == target) {
            b.beta = beta;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("target bath is not part of the system");
    return spec;
}

Matrix probe_state(const Matrix& rho, int probe, int n_qubits) {
    if (probe == 0) return rho;
    if (n_qubits != 2) throw std::invalid_argument("probe reduction needs two qubits");
    if (probe != 1 && probe != 2) throw std::invalid_argument("probe must be 0, 1, or 2");
    return partial_trace(rho, probe);
}

double target_beta(const SystemSpec& spec, BathLabel target) {
    const BathSpec* b = spec.find_bath(target);
    if (!b) throw std::invalid_argument("target bath is not part of the system");
    return b->beta;
}

QfiSample make_sample(double t, double beta, const Matrix& rho, const Matrix& d_h,
                      const Matrix& d_h2) {
    // Richardson: the h/2 quotient has 1/4 the quadrature error, so the
    // extrapolation (4 d_{h/2} - d_h) / 3 cancels the leading term.
    Matrix drho = (4.0 * d_h2 - d_h) / 3.0;
    double scale = std::max(1.0, d_h2.norm());
    QfiSample s;
    s.t = t;
    s.richardson_residual = (d_h2 - d_h).norm() / scale;
    s.qfi_beta = clip_qfi(qfi(rho, drho));
    s.qfi_temperature = qfi_wrt_temperature(s.qfi_beta, beta);
    s.trace_error = std::abs(rho.trace().real() - 1.0);
    s.min_eig = min_eigenvalue(0.5 * (rho + Matrix(rho.adjoint())));
    return s;
}

}  // namespace

double qfi_spectral(const Matrix& rho, const Matrix& drho) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
    const auto& lam = es.eigenvalues();
    Matrix dv = es.eigenvectors().adjoint() * drho * es.eigenvectors();
    double f = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        for (Eigen::Index j = 0; j < lam.size(); ++j) {
            double s = lam(i) + lam(j);
            if (s > 1e-12) f += 2.0 * std::norm(dv(i, j)) / s;
        }
    }
    return clip_qfi(f);
}

double qfi(const Matrix& rho, const Matrix& drho) {
    if (rho.rows() == 2) {
        double det = rho.determinant().real();
        if (det > 1e-12) {
            Complex tr1 = (drho * drho).trace();
            Complex tr2 = (rho * drho * rho * drho).trace();
            return clip_qfi(tr1.real() + tr2.real() / det);
        }
    }
    return qfi_spectral(rho, drho);
}

double qfi_wrt_temperature(double qfi_beta, double beta) {
    return qfi_beta * std::pow(beta, 4);
}

std::vector<QfiSample> qfi_trajectory(const SystemSpec& spec,
                                      const ApproximationVariant& variant, BathLabel target,
                                      const std::vector<double>& times, int probe,
                                      const DerivativeOptions& opts,
                                      const IntegratorOptions& iopts, Propagator propagator) {
    spec.validate();
    double beta = target_beta(spec, target);
    double h = std::max(opts.h_min, opts.h_rel * beta);
    if (beta - h <= 0.0) throw std::invalid_argument("beta too small for the difference step");

    Matrix rho0 = spec.initial_density();
    auto run = [&](double b) {
        LiouvillianModel m = build_model(with_target_beta(spec, target, b), variant);
        return propagator == Propagator::Spectral ? evolve_spectral(m, rho0, times)
                                                  : evolve(m, rho0, times, iopts);
    };
    Trajectory base = run(beta);
    Trajectory tp = run(beta + h), tm = run(beta - h);
    Trajectory tp2 = run(beta + 0.5 * h), tm2 = run(beta - 0.5 * h);

    std::vector<QfiSample> out;
    out.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        Matrix rho = probe_state(base.states[i], probe, spec.n_qubits);
        Matrix d_h = probe_state((tp.states[i] - tm.states[i]) / (2.0 * h), probe, spec.n_qubits);
        Matrix d_h2 = probe_state((tp2.states[i] - tm2.states[i]) / h, probe, spec.n_qubits);
        QfiSample s = make_sample(times[i], beta, rho, d_h, d_h2);
        s.trace_error = base.trace_error[i];
        s.min_eig = base.min_eig[i];
        out.push_back(s);
    }
    return out;
}

QfiSample steady_qfi_numeric(const SystemSpec& spec, const ApproximationVariant& variant,
                             BathLabel target, int probe, const DerivativeOptions& opts) {
    spec.validate();
    double beta = target_beta(spec, target);
    double h = std::max(opts.h_min, opts.h_rel * beta);
    if (beta - h <= 0.0) throw std::invalid_argument("beta too small for the difference step");

    auto solve = [&](double b) {
        return steady_state(build_model(with_target_beta(spec, target, b), variant));
    };
    Matrix rho = probe_state(solve(beta), probe, spec.n_qubits);
    Matrix d_h =
        probe_state((solve(beta + h) - solve(beta - h)) / (2.0 * h), probe, spec.n_qubits);
    Matrix d_h2 =
        probe_state((solve(beta + 0.5 * h) - solve(beta - 0.5 * h)) / h, probe, spec.n_qubits);
    return make_sample(0.0, beta, rho, d_h, d_h2);
}

}  // namespace qtherm
