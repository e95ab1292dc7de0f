#include "qtherm/dynamics.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace qtherm {
namespace {

using Vector = Eigen::VectorXcd;

Vector flatten(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unflatten(const Vector& v, int d) {
    return Eigen::Map<const Matrix>(v.data(), d, d);
}

// Dormand-Prince 5(4) coefficients.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                 E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;
// Dense-output weights (Hairer & Wanner, DOPRI5 continuous extension).
constexpr double D1 = -12715105075.0 / 11282082432.0;
constexpr double D3 = 87487479700.0 / 32700410799.0;
constexpr double D4 = -10690763975.0 / 1880347072.0;
constexpr double D5 = 701980252875.0 / 199316789632.0;
constexpr double D6 = -1453857185.0 / 822651844.0;
constexpr double D7 = 69997945.0 / 29380423.0;

struct Stepper {
    const LiouvillianModel& model;
    int dim;

    Vector deriv(const Vector& v) const {
        return flatten(model.apply(unflatten(v, dim)));
    }
};

}  // namespace

std::vector<double> TimeGrid::times() const {
    if (n_points < 2) throw std::invalid_argument("time grid needs at least 2 points");
    if (t_end <= t_start) throw std::invalid_argument("t_end must exceed t_start");
    std::vector<double> out(n_points);
    if (spacing == Spacing::Linear) {
        double dt = (t_end - t_start) / (n_points - 1);
        for (int i = 0; i < n_points; ++i) out[i] = t_start + i * dt;
    } else {
        if (t_start <= 0.0) throw std::invalid_argument("log grid needs t_start > 0");
        double lg0 = std::log(t_start), lg1 = std::log(t_end);
        double dl = (lg1 - lg0) / (n_points - 1);
        for (int i = 0; i < n_points; ++i) out[i] = std::exp(lg0 + i * dl);
    }
    out.back() = t_end;
    return out;
}

Trajectory evolve(const LiouvillianModel& model, const Matrix& rho0,
                  const std::vector<double>& times, const IntegratorOptions& opts) {
    if (times.empty()) throw std::invalid_argument("empty sample grid");
    if (times.front() < 0.0) throw std::invalid_argument("sample times must be >= 0");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] < times[i - 1]) throw std::invalid_argument("sample times must be sorted");
    int d = model.dim;
    if (rho0.rows() != d || rho0.cols() != d)
        throw std::invalid_argument("initial state dimension mismatch");
    validate_density(rho0);

    Trajectory traj;
    auto record = [&](double t, const Vector& v) {
        Matrix rho = unflatten(v, d);
        traj.times.push_back(t);
        traj.trace_error.push_back(std::abs(rho.trace().real() - 1.0) +
                                   std::abs(rho.trace().imag()));
        traj.herm_error.push_back(hermiticity_error(rho));
        rho = 0.5 * (rho + Matrix(rho.adjoint()));
        traj.min_eig.push_back(min_eigenvalue(rho));
        traj.states.push_back(std::move(rho));
    };

    Stepper st{model, d};
    double t = 0.0;
    Vector y = flatten(rho0);
    Vector k1 = st.deriv(y);
    std::size_t next = 0;
    while (next < times.size() && times[next] <= t) record(times[next++], y);
    if (next == times.size()) return traj;

    double t_final = times.back();
    double hmax = opts.max_step > 0.0 ? opts.max_step : t_final;
    double h = std::min(hmax, 1e-4 * std::max(1.0, t_final));
    long n_steps = 0;

    while (t < t_final) {
        if (++n_steps > opts.max_steps) throw std::runtime_error("integrator step limit hit");
        h = std::min({h, hmax, t_final - t});

        Vector k2 = st.deriv(y + h * (A21 * k1));
        Vector k3 = st.deriv(y + h * (A31 * k1 + A32 * k2));
        Vector k4 = st.deriv(y + h * (A41 * k1 + A42 * k2 + A43 * k3));
        Vector k5 = st.deriv(y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4));
        Vector k6 = st.deriv(y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5));
        Vector y_new = y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
        Vector k7 = st.deriv(y_new);
        Vector err_v = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);

        double err = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            double sc = opts.atol +
                        opts.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            double e = std::abs(err_v[i]) / sc;
            err += e * e;
        }
        err = std::sqrt(err / static_cast<double>(y.size()));

        if (err <= 1.0) {
            // Dense output over [t, t+h] for every sample point inside.
            Vector diff = y_new - y;
            Vector r3 = h * k1 - diff;
            Vector r4 = diff - h * k7 - r3;
            Vector r5 = h * (D1 * k1 + D3 * k3 + D4 * k4 + D5 * k5 + D6 * k6 + D7 * k7);
            while (next < times.size() && times[next] <= t + h + 1e-14 * t_final) {
                double th = (times[next] - t) / h;
                double th1 = 1.0 - th;
                Vector yi = y + th * (diff + th1 * (r3 + th * (r4 + th1 * r5)));
                record(times[next++], yi);
            }
            t += h;
            y = std::move(y_new);
            k1 = std::move(k7);
            if (next == times.size()) break;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::min(5.0, std::max(0.2, fac));
        if (h < 1e-14 * std::max(1.0, t)) throw std::runtime_error("integrator step underflow");
    }
    return traj;
}

Trajectory evolve_spectral(const LiouvillianModel& model, const Matrix& rho0,
                           const std::vector<double>& times) {
    int d = model.dim;
    if (rho0.rows() != d || rho0.cols() != d)
        throw std::invalid_argument("initial state dimension mismatch");
    validate_density(rho0);
    Matrix sup = superop_matrix(model);
    Eigen::ComplexEigenSolver<Matrix> es(sup);
    if (es.info() != Eigen::Success) throw std::runtime_error("superoperator eigensolve failed");
    Eigen::PartialPivLU<Matrix> lu(es.eigenvectors());
    Vector v0 = lu.solve(flatten(rho0));
    double resid = (es.eigenvectors() * v0 - flatten(rho0)).norm();
    if (resid > 1e-8) throw std::runtime_error("superoperator eigenbasis is ill-conditioned");

    Trajectory traj;
    for (double t : times) {
        Vector v = es.eigenvectors() * (es.eigenvalues().array() * t).exp().matrix().asDiagonal() *
                   v0;
        Matrix rho = unflatten(v, d);
        traj.times.push_back(t);
        traj.trace_error.push_back(std::abs(rho.trace().real() - 1.0) +
                                   std::abs(rho.trace().imag()));
        traj.herm_error.push_back(hermiticity_error(rho));
        rho = 0.5 * (rho + Matrix(rho.adjoint()));
        traj.min_eig.push_back(min_eigenvalue(rho));
        traj.states.push_back(std::move(rho));
    }
    return traj;
}

Matrix steady_state(const LiouvillianModel& model, double kernel_tol) {
    int d = model.dim;
    Matrix sup = superop_matrix(model);

    Eigen::JacobiSVD<Matrix> svd(sup);
    double scale = svd.singularValues()(0);
    int null_dim = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) < kernel_tol * std::max(1.0, scale)) ++null_dim;
    if (null_dim == 0) throw std::runtime_error("generator has no stationary state");
    if (null_dim > 1)
        throw std::runtime_error("stationary state is not unique (degenerate kernel)");

    // Bordered system: generator rows plus the trace-one constraint.
    Matrix m(d * d + 1, d * d);
    m.topRows(d * d) = sup;
    m.row(d * d).setZero();
    for (int i = 0; i < d; ++i) m(d * d, i * d + i) = 1.0;
    Vector b = Vector::Zero(d * d + 1);
    b(d * d) = 1.0;
    Vector v = m.colPivHouseholderQr().solve(b);

    Matrix rho = Eigen::Map<Matrix>(v.data(), d, d);
    rho = 0.5 * (rho + Matrix(rho.adjoint()));
    rho /= rho.trace().real();
    return rho;
}

Trajectory reduced_trajectory(const Trajectory& full, int keep) {
    Trajectory out;
    out.times = full.times;
    out.states.reserve(full.states.size());
    for (std::size_t i = 0; i < full.states.size(); ++i) {
        Matrix r = partial_trace(full.states[i], keep);
        out.trace_error.push_back(std::abs(r.trace().real() - 1.0));
        out.herm_error.push_back(hermiticity_error(r));
        out.min_eig.push_back(min_eigenvalue(0.5 * (r + Matrix(r.adjoint()))));
        out.states.push_back(std::move(r));
    }
    return out;
}

}  // namespace qtherm
