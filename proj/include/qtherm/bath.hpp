// Thermal bosonic bath: spectral density, occupation numbers, decay rates
// and Lamb-shift coefficients (one-sided Fourier transform of the bath
// correlation function). All rates here are unit-coupling; the dissipative
// and dephasing couplings mu_x, mu_z are applied at generator assembly.
#pragma once

#include <complex>
#include <string>

namespace qtherm {

/// Ohmic spectral density with a Lorentzian high-frequency cutoff,
/// J(w) = w * wc^2 / (wc^2 + w^2).
struct SpectralDensity {
    double cutoff = 20.0;  // wc, in units of the first qubit frequency
};

enum class BathLabel { Common, Local1, Local2 };

std::string to_string(BathLabel label);

/// One bath attachment: inverse temperature plus dissipative (x) and
/// dephasing (z) coupling strengths. Couplings well above ~0.2 leave the
/// weak-coupling regime; construction warns but does not reject.
struct BathSpec {
    double beta = 1.0;
    double mu_x = 0.0;
    double mu_z = 0.0;
    SpectralDensity spectral{};
    BathLabel label = BathLabel::Common;

    void validate() const;  // throws std::invalid_argument on bad fields
};

/// Decay/Lamb-shift pair: Gamma(w) = gamma/2 + i*s.
struct HalfFourierRate {
    double gamma = 0.0;  // 2 Re Gamma(w), >= 0 for thermal baths
    double s = 0.0;      // Im Gamma(w)

    std::complex<double> value() const { return {gamma / 2.0, s}; }
};

double ohmic_j(double omega, const SpectralDensity& sd);

/// Bose-Einstein occupation 1/(e^{beta w} - 1). Requires w > 0, beta > 0.
double bose_occupation(double omega, double beta);

/// Unit-coupling decay rate gamma(w) for any sign of w:
///   w > 0:  pi J(w) (coth(beta w/2) + 1)
///   w < 0:  pi J(-w) (coth(-beta w/2) - 1)
///   w = 0:  pi lim_{w->0+} J(w) coth(beta w/2) = 2 pi/beta for Ohmic J
double gamma_rate(double omega, double beta, const SpectralDensity& sd);

/// Principal-value quadrature controls for lamb_shift_s.
struct PvOptions {
    double lambda_factor = 50.0;  // upper limit Lambda = lambda_factor * wc
    double rel_tol = 1e-9;        // per-panel adaptive tolerance
    double stab_tol = 1e-8;       // required stability under window refinement
};

/// Unit-coupling Lamb-shift coefficient s(w):
///   w != 0:  P int_0^inf J(wk) [ (n(wk)+1)/(w-wk) + n(wk)/(w+wk) ] dwk
///   w == 0:  -P int_0^inf J(wk)/wk dwk  (= -pi wc / 2 for Ohmic J)
/// The pole at wk = |w| is removed by symmetric pairing of the integrand
/// about the pole; the window half-width is refined until the result is
/// stable. The tail beyond Lambda is added in closed form (thermal part is
/// exponentially negligible there). Throws on non-convergence.
double lamb_shift_s(double omega, double beta, const SpectralDensity& sd,
                    const PvOptions& opts = {});

/// Memoized Gamma(w) = gamma(w)/2 + i s(w), keyed on (w, beta, cutoff).
/// Safe for concurrent readers.
HalfFourierRate half_fourier(double omega, double beta, const SpectralDensity& sd);

}  // namespace qtherm
