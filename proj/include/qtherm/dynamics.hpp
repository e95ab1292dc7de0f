#pragma once

#include "qtherm/liouvillian.hpp"

#include <vector>

namespace qtherm {

struct TimeGrid {
    enum class Spacing { Linear, Log };
    double t_start = 0.0;
    double t_end = 100.0;
    int n_points = 201;
    Spacing spacing = Spacing::Linear;

    std::vector<double> times() const;
};

struct IntegratorOptions {
    double rtol = 1e-9;
    double atol = 1e-12;
    double max_step = 0.0;  // <= 0: t_end - t_start
    long max_steps = 2000000;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Matrix> states;
    // Per-sample diagnostics: |tr(rho) - 1|, smallest eigenvalue, and the
    // largest deviation from Hermiticity.
    std::vector<double> trace_error;
    std::vector<double> min_eig;
    std::vector<double> herm_error;

    std::size_t size() const { return times.size(); }
};

/// Propagate rho0 through the generator, sampling at the requested times
/// (which must be non-decreasing, first >= 0).
Trajectory evolve(const LiouvillianModel& model, const Matrix& rho0,
                  const std::vector<double>& times, const IntegratorOptions& opts = {});

/// Propagate through the eigendecomposition of the superoperator matrix.
/// Exact up to the decomposition for the time-independent generators used
/// here; preferred for long horizons where step error would accumulate.
Trajectory evolve_spectral(const LiouvillianModel& model, const Matrix& rho0,
                           const std::vector<double>& times);

/// Unique trace-one kernel element of the generator. Throws if the kernel is
/// degenerate (more than one stationary direction).
Matrix steady_state(const LiouvillianModel& model, double kernel_tol = 1e-8);

/// Trajectory of one qubit of a two-qubit evolution (keep = 1 or 2).
Trajectory reduced_trajectory(const Trajectory& full, int keep);

}  // namespace qtherm
