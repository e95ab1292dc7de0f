#include "qtherm/analytic.hpp"

#include "qtherm/bath.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qtherm {

void AnalyticParams::validate() const {
    if (omega <= 0.0) throw std::invalid_argument("omega must be positive");
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    if (mu_x <= 0.0) throw std::invalid_argument("mu_x must be positive");
    if (cutoff <= 0.0) throw std::invalid_argument("cutoff must be positive");
}

double AnalyticParams::rate_scale() const {
    SpectralDensity sd{cutoff};
    return M_PI * ohmic_j(omega, sd) * mu_x * mu_x;
}

Matrix analytic_state(const AnalyticParams& p, double t) {
    p.validate();
    if (t < 0.0) throw std::invalid_argument("t must be >= 0");
    double n = bose_occupation(p.omega, p.beta);
    double c = p.rate_scale();
    double g_down = 2.0 * c * (n + 1.0);
    double g_up = 2.0 * c * n;
    double total = g_down + g_up;
    double decay = std::exp(-total * t);
    Matrix rho = Matrix::Zero(2, 2);
    rho(0, 0) = g_up * (1.0 - decay) / total;
    rho(1, 1) = (g_down + g_up * decay) / total;
    return rho;
}

double analytic_qfi(const AnalyticParams& p, double t) {
    p.validate();
    if (t < 0.0) throw std::invalid_argument("t must be >= 0");
    double bw = p.beta * p.omega;
    double n = bose_occupation(p.omega, p.beta);
    double c = p.rate_scale();
    double chi = 2.0 * c * t / std::tanh(0.5 * bw);
    double E = std::exp(-chi);  // decay factor e^{-chi}
    double ebw = std::exp(bw);
    // eta * e^{-chi} evaluated without forming e^{chi}.
    double a = ebw * (2.0 + 4.0 * c * t - ebw) + 4.0 * c * t - 1.0;
    double eta_e = a * E + 1.0 / (n * n);
    if (t == 0.0) return 0.0;  // 1 - E vanishes; the QFI starts at zero
    double denom = (1.0 - E) * (ebw + 1.0) * (ebw + 1.0) * (E + ebw);
    return eta_e * eta_e * std::pow(n, 4) * p.omega * p.omega * ebw * ebw / denom;
}

double steady_qfi(double omega, double beta) {
    if (omega <= 0.0 || beta <= 0.0)
        throw std::invalid_argument("omega and beta must be positive");
    double bw = beta * omega;
    if (bw > 700.0) return 0.0;
    return omega * omega / (2.0 + 2.0 * std::cosh(bw));
}

double relative_error(double beta, double qfi) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    if (qfi <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (beta * std::sqrt(qfi));
}

}  // namespace qtherm
