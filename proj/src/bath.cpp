#include "qtherm/bath.hpp"

#include <cmath>
#include <iostream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace qtherm {

std::string to_string(BathLabel label) {
    switch (label) {
        case BathLabel::Common: return "common";
        case BathLabel::Local1: return "local1";
        case BathLabel::Local2: return "local2";
    }
    return "?";
}

void BathSpec::validate() const {
    if (!(beta > 0.0)) throw std::invalid_argument("BathSpec: beta must be > 0");
    if (mu_x < 0.0 || mu_z < 0.0)
        throw std::invalid_argument("BathSpec: couplings must be >= 0");
    if (!(spectral.cutoff > 0.0))
        throw std::invalid_argument("BathSpec: spectral cutoff must be > 0");
    if (mu_x > 0.2 || mu_z > 0.2)
        std::cerr << "warning: bath '" << to_string(label)
                  << "' coupling above 0.2 leaves the weak-coupling regime\n";
}

double ohmic_j(double omega, const SpectralDensity& sd) {
    const double wc2 = sd.cutoff * sd.cutoff;
    return omega * wc2 / (wc2 + omega * omega);
}

double bose_occupation(double omega, double beta) {
    if (!(omega > 0.0)) throw std::invalid_argument("bose_occupation: omega must be > 0");
    if (!(beta > 0.0)) throw std::invalid_argument("bose_occupation: beta must be > 0");
    const double x = beta * omega;
    if (x > 700.0) return 0.0;
    return 1.0 / std::expm1(x);
}

double gamma_rate(double omega, double beta, const SpectralDensity& sd) {
    if (!(beta > 0.0)) throw std::invalid_argument("gamma_rate: beta must be > 0");
    if (omega > 0.0) {
        // pi J(w) (coth(beta w/2) + 1) = 2 pi J(w) (n(w) + 1)
        return 2.0 * M_PI * ohmic_j(omega, sd) * (bose_occupation(omega, beta) + 1.0);
    }
    if (omega < 0.0) {
        return 2.0 * M_PI * ohmic_j(-omega, sd) * bose_occupation(-omega, beta);
    }
    // lim_{w->0+} J(w) coth(beta w/2) = 2/beta for the Ohmic density
    return 2.0 * M_PI / beta;
}

namespace {

// ---- adaptive Gauss-Kronrod (G7, K15) quadrature ------------------------

const double kKronrodNodes[8] = {
    0.0,                    0.2077849550078985,  0.4058451513773972,
    0.5860872354676911,     0.7415311855993944,  0.8648644233597691,
    0.9491079123427585,     0.9914553711208126};
const double kKronrodWeights[8] = {
    0.2094821410847278, 0.2044329400752989, 0.1903505780647854,
    0.1690047266392679, 0.1406532597155259, 0.1047900103222502,
    0.0630920926299786, 0.0229353220105292};
// Gauss-7 weights aligned with Kronrod nodes 0, 2, 4, 6 (by |node|)
const double kGaussWeights[4] = {
    0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
    0.1294849661688697};

template <typename F>
void gk15(const F& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fk = 0.0, fg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = h * kKronrodNodes[i];
        const double v = (i == 0) ? f(c) : f(c - x) + f(c + x);
        fk += kKronrodWeights[i] * v;
        if (i % 2 == 0) fg += kGaussWeights[i / 2] * v;
    }
    kronrod = fk * h;
    err = std::abs((fk - fg) * h);
}

template <typename F>
double integrate_adaptive(const F& f, double a, double b, double tol, int depth = 0) {
    double v, err;
    gk15(f, a, b, v, err);
    if (err <= tol * (1.0 + std::abs(v)) || depth >= 48) return v;
    const double c = 0.5 * (a + b);
    return integrate_adaptive(f, a, c, 0.5 * tol, depth + 1) +
           integrate_adaptive(f, c, b, 0.5 * tol, depth + 1);
}

// Closed-form zero-temperature tail: int_L^inf J(wk)/(w - wk) dwk for the
// Ohmic J. Partial fractions of wk/((wc^2+wk^2)(w-wk)) with
// A = C = w/(wc^2+w^2), B = -A wc^2 / w.
double zero_temp_tail(double omega, double lambda, const SpectralDensity& sd) {
    const double wc = sd.cutoff;
    const double a = omega / (wc * wc + omega * omega);
    const double b = -a * wc * wc / omega;
    const double f_lambda =
        wc * wc * (0.5 * a * std::log(wc * wc + lambda * lambda) +
                   (b / wc) * std::atan(lambda / wc) -
                   a * std::log(std::abs(lambda - omega)));
    const double f_inf = wc * wc * (b / wc) * (0.5 * M_PI);
    return f_inf - f_lambda;
}

}  // namespace

double lamb_shift_s(double omega, double beta, const SpectralDensity& sd,
                    const PvOptions& opts) {
    if (!(beta > 0.0)) throw std::invalid_argument("lamb_shift_s: beta must be > 0");
    if (omega == 0.0) {
        // -P int_0^inf J(wk)/wk dwk = -(pi/2) wc for the Ohmic density
        return -0.5 * M_PI * sd.cutoff;
    }

    double lambda = opts.lambda_factor * sd.cutoff;
    // keep the thermal occupation negligible at the truncation point
    if (beta * lambda < 30.0) lambda = 30.0 / beta;

    const auto integrand = [&](double wk) {
        const double n = bose_occupation(wk, beta);
        return ohmic_j(wk, sd) *
               ((n + 1.0) / (omega - wk) + n / (omega + wk));
    };

    const double pole = std::abs(omega);
    const double tol = opts.rel_tol;

    // Principal value: pair the integrand symmetrically about the pole so
    // the 1/(wk - pole) parts cancel, then refine the pairing half-width
    // until the total is stable.
    const auto evaluate = [&](double half_width) {
        const double core = integrate_adaptive(
            [&](double u) { return integrand(pole + u) + integrand(pole - u); },
            0.0, half_width, tol);
        const double left = (pole - half_width > 0.0)
            ? integrate_adaptive(integrand, 0.0, pole - half_width, tol)
            : 0.0;
        double right = 0.0;
        // split the long upper range at a few scales for the adaptive rule
        double edges[4] = {pole + half_width, 2.0 * sd.cutoff, 10.0 * sd.cutoff, lambda};
        for (int i = 0; i < 3; ++i) {
            if (edges[i + 1] > edges[i])
                right += integrate_adaptive(integrand, edges[i], edges[i + 1], tol);
        }
        return core + left + right;
    };

    double half_width = 0.5 * pole;
    double prev = evaluate(half_width);
    for (int it = 0; it < 8; ++it) {
        half_width *= 0.5;
        const double cur = evaluate(half_width);
        if (std::abs(cur - prev) <= opts.stab_tol * std::max(1.0, std::abs(cur)))
            return cur + zero_temp_tail(omega, lambda, sd);
        prev = cur;
    }
    throw std::runtime_error("lamb_shift_s: principal-value quadrature did not stabilize");
}

namespace {

using RateKey = std::tuple<double, double, double>;  // omega, beta, cutoff

std::map<RateKey, HalfFourierRate>& rate_cache() {
    static std::map<RateKey, HalfFourierRate> cache;
    return cache;
}

std::shared_mutex& rate_cache_mutex() {
    static std::shared_mutex m;
    return m;
}

}  // namespace

HalfFourierRate half_fourier(double omega, double beta, const SpectralDensity& sd) {
    const RateKey key{omega, beta, sd.cutoff};
    {
        std::shared_lock lock(rate_cache_mutex());
        auto it = rate_cache().find(key);
        if (it != rate_cache().end()) return it->second;
    }
    HalfFourierRate rate;
    rate.gamma = gamma_rate(omega, beta, sd);
    rate.s = lamb_shift_s(omega, beta, sd);
    std::unique_lock lock(rate_cache_mutex());
    rate_cache().emplace(key, rate);
    return rate;
}

}  // namespace qtherm
