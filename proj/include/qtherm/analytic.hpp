// Closed-form single-qubit references: population relaxation from the ground
// slot, the corresponding inverse-temperature QFI, and its long-time limit.
// These back the solver tests and the relative-error sweep.
#pragma once

#include "qtherm/operators.hpp"

namespace qtherm {

struct AnalyticParams {
    double omega = 1.0;
    double beta = 1.0;
    double mu_x = 0.01;
    double cutoff = 20.0;

    void validate() const;
    // c = pi * J(omega) * mu_x^2, the basic thermalization scale.
    double rate_scale() const;
};

/// Closed-form relaxation state at time t (populations only; the evolution
/// starts with the lower slot fully occupied, so no coherences appear).
Matrix analytic_state(const AnalyticParams& p, double t);

/// QFI with respect to beta of analytic_state at time t, in a form that is
/// stable for large beta*omega and large t (no bare exp(chi) factors).
double analytic_qfi(const AnalyticParams& p, double t);

/// Long-time limit: omega^2 / (2 + 2 cosh(beta omega)).
double steady_qfi(double omega, double beta);

/// Relative error of the inverse-temperature estimate, 1/(beta sqrt(F)).
double relative_error(double beta, double qfi);

}  // namespace qtherm
