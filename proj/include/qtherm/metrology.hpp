#pragma once

#include "qtherm/dynamics.hpp"

namespace qtherm {

/// QFI of rho with respect to the parameter behind drho. 2x2 states with a
/// non-singular rho use the determinant shortcut; everything else goes
/// through the spectral SLD sum.
double qfi(const Matrix& rho, const Matrix& drho);
double qfi_spectral(const Matrix& rho, const Matrix& drho);

/// F_T = beta^4 * F_beta (temperature vs inverse-temperature estimation).
double qfi_wrt_temperature(double qfi_beta, double beta);

struct DerivativeOptions {
    // Central-difference step: max(h_min, h_rel * beta), Richardson-refined
    // with a half step.
    double h_rel = 1e-4;
    double h_min = 1e-5;
    double richardson_tol = 1e-6;
};

struct QfiSample {
    double t = 0.0;
    double qfi_beta = 0.0;
    double qfi_temperature = 0.0;
    double trace_error = 0.0;
    double min_eig = 0.0;
    // Relative disagreement between the h and h/2 difference quotients;
    // values above richardson_tol mean the step was too coarse.
    double richardson_residual = 0.0;
};

enum class Propagator { Adaptive, Spectral };

/// QFI with respect to the inverse temperature of the `target` bath along a
/// trajectory. probe = 0 uses the full state; probe = 1 or 2 reduces to that
/// qubit first.
std::vector<QfiSample> qfi_trajectory(const SystemSpec& spec,
                                      const ApproximationVariant& variant, BathLabel target,
                                      const std::vector<double>& times, int probe = 0,
                                      const DerivativeOptions& opts = {},
                                      const IntegratorOptions& iopts = {},
                                      Propagator propagator = Propagator::Adaptive);

/// Same estimation problem for the stationary state of the generator.
QfiSample steady_qfi_numeric(const SystemSpec& spec, const ApproximationVariant& variant,
                             BathLabel target, int probe = 0,
                             const DerivativeOptions& opts = {});

}  // namespace qtherm
