#include "qtherm/acceptance.hpp"

#include "qtherm/analytic.hpp"
#include "qtherm/metrology.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

namespace qtherm::acceptance {
namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

SystemSpec single_spec(double beta, double mu_x, InitialState init, double mu_z = 0.0) {
    SystemSpec s;
    s.n_qubits = 1;
    s.omega1 = 1.0;
    s.initial_state = init;
    BathSpec b;
    b.label = BathLabel::Common;
    b.beta = beta;
    b.mu_x = mu_x;
    b.mu_z = mu_z;
    s.baths.push_back(b);
    return s;
}

// Standard two-qubit setup: omega1 = 1, omega2 = 1 - detuning, coupling
// strength mu per bath contact. Baths present only when a beta is given.
SystemSpec two_spec(std::optional<double> beta_c, std::optional<double> beta_l1,
                    std::optional<double> beta_l2, double detuning = 0.01, double k = 0.0,
                    double mu_x = 0.01, double mu_z = 0.0) {
    SystemSpec s;
    s.n_qubits = 2;
    s.omega1 = 1.0;
    s.omega2 = 1.0 - detuning;
    s.k = k;
    s.initial_state = InitialState::PlusPlus;
    auto add = [&](std::optional<double> beta, BathLabel label) {
        if (!beta) return;
        BathSpec b;
        b.label = label;
        b.beta = *beta;
        b.mu_x = mu_x;
        b.mu_z = mu_z;
        s.baths.push_back(b);
    };
    add(beta_c, BathLabel::Common);
    add(beta_l1, BathLabel::Local1);
    add(beta_l2, BathLabel::Local2);
    return s;
}

std::vector<double> series(const SystemSpec& spec, const ApproximationVariant& variant,
                           BathLabel target, const std::vector<double>& times, int probe) {
    auto samples = qfi_trajectory(spec, variant, target, times, probe, {}, {},
                                  Propagator::Spectral);
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = samples[i].qfi_beta;
    return out;
}

double peak(const std::vector<double>& v, std::size_t* at = nullptr) {
    auto it = std::max_element(v.begin(), v.end());
    if (at) *at = static_cast<std::size_t>(it - v.begin());
    return *it;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

double trace_distance(const Matrix& a, const Matrix& b) {
    Eigen::JacobiSVD<Matrix> svd(a - b);
    return 0.5 * svd.singularValues().sum();
}

Matrix gibbs_qubit(double omega, double beta) {
    double p = std::exp(-beta * omega) / (1.0 + std::exp(-beta * omega));
    Matrix g = Matrix::Zero(2, 2);
    g(0, 0) = p;
    g(1, 1) = 1.0 - p;
    return g;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

constexpr ApproximationVariant kPartial{};
constexpr ApproximationVariant kFull{Secular::Full, CoefficientScheme::Redfield, true, -1.0};
constexpr ApproximationVariant kUnified{Secular::Partial, CoefficientScheme::Unified, true,
                                        -1.0};

// --- checks ---------------------------------------------------------------

CheckResult check_analytic_oracle() {
    double worst = 0.0;
    for (double mu : {0.01, 0.02, 0.03}) {
        AnalyticParams ap;
        ap.mu_x = mu;
        double big_gamma = 2.0 * ap.rate_scale() / std::tanh(0.5);
        std::vector<double> ts = linspace(0.0, 10.0 / big_gamma, 121);
        SystemSpec spec = single_spec(1.0, mu, InitialState::Ground);
        std::vector<double> num = series(spec, kPartial, BathLabel::Common, ts, 0);
        double sup = 0.0, ref = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            double ana = analytic_qfi(ap, ts[i]);
            sup = std::max(sup, std::abs(num[i] - ana));
            ref = std::max(ref, ana);
        }
        worst = std::max(worst, sup / ref);
    }
    return {"analytic-oracle", worst <= 1e-5,
            "relative sup-norm vs closed form = " + fmt(worst) + " (<= 1e-5)"};
}

CheckResult check_steady_qfi() {
    auto steady_at = [](double beta) {
        return steady_qfi_numeric(single_spec(beta, 0.01, InitialState::Ground), kPartial,
                                  BathLabel::Common, 0)
            .qfi_beta;
    };
    double f_hot = steady_at(0.1), f_unit = steady_at(1.0);
    bool pass = std::abs(f_hot - 0.2494) <= 1e-4 && std::abs(f_unit - 0.1966) <= 1e-4;
    return {"steady-qfi", pass,
            "F(beta=0.1) = " + fmt(f_hot) + " (0.2494 +- 1e-4), F(beta=1) = " + fmt(f_unit) +
                " (0.1966 +- 1e-4)"};
}

CheckResult check_thermalization() {
    double worst = 0.0;
    for (InitialState init :
         {InitialState::ExcitedExcited, InitialState::PlusPlus, InitialState::Ground}) {
        SystemSpec spec = single_spec(1.0, 0.01, init);
        LiouvillianModel m = build_model(spec, kPartial);
        AnalyticParams ap;  // beta = 1, mu_x = 0.01
        double big_gamma = 2.0 * ap.rate_scale() / std::tanh(0.5);
        Trajectory tr =
            evolve_spectral(m, spec.initial_density(), {50.0 / big_gamma});
        worst = std::max(worst, trace_distance(tr.states.back(), gibbs_qubit(1.0, 1.0)));
    }
    // two local baths at a shared temperature relax to the product Gibbs state
    SystemSpec two = two_spec(std::nullopt, 1.0, 1.0);
    LiouvillianModel m2 = build_model(two, kPartial);
    Trajectory tr2 = evolve_spectral(m2, two.initial_density(), {4e5});
    Matrix target = tensor(gibbs_qubit(two.omega1, 1.0), gibbs_qubit(two.omega2, 1.0));
    worst = std::max(worst, trace_distance(tr2.states.back(), target));
    return {"thermalization", worst < 1e-8,
            "max trace distance to Gibbs = " + fmt(worst) + " (< 1e-8)"};
}

CheckResult check_secular_dichotomy() {
    std::vector<double> ts = linspace(1.0, 30000.0, 120);
    // wide detuning: partial and full secular retain the same terms
    SystemSpec wide = two_spec(1.0, std::nullopt, std::nullopt, 0.5);
    std::vector<double> wp = series(wide, kPartial, BathLabel::Common, ts, 1);
    std::vector<double> wf = series(wide, kFull, BathLabel::Common, ts, 1);
    double agree = sup_diff(wp, wf) / peak(wf);

    // narrow detuning: cross terms produce quantum beats under PSA
    SystemSpec narrow = two_spec(1.0, std::nullopt, std::nullopt, 0.01);
    std::vector<double> np_ = series(narrow, kPartial, BathLabel::Common, ts, 1);
    std::vector<double> nf = series(narrow, kFull, BathLabel::Common, ts, 1);
    double ratio = peak(np_) / peak(nf);

    double sp = steady_qfi_numeric(narrow, kPartial, BathLabel::Common, 1).qfi_beta;
    double sf = steady_qfi_numeric(narrow, kFull, BathLabel::Common, 1).qfi_beta;
    double steady_gap = std::abs(sp - sf);

    bool pass = agree <= 0.01 && ratio >= 1.2 && steady_gap <= 1e-4;
    return {"secular-dichotomy", pass,
            "wide-detuning sup-diff = " + fmt(agree) + " (<= 0.01), peak ratio = " + fmt(ratio) +
                " (>= 1.2), steady gap = " + fmt(steady_gap) + " (<= 1e-4)"};
}

CheckResult check_unified_vs_redfield() {
    std::vector<double> ts = linspace(1.0, 30000.0, 120);
    SystemSpec narrow = two_spec(1.0, std::nullopt, std::nullopt, 0.01);
    std::vector<double> fr = series(narrow, kPartial, BathLabel::Common, ts, 1);
    std::vector<double> fu = series(narrow, kUnified, BathLabel::Common, ts, 1);
    double rel = sup_diff(fr, fu) / peak(fr);
    return {"unified-vs-redfield", rel <= 0.02,
            "relative sup-norm between schemes = " + fmt(rel) + " (<= 0.02)"};
}

CheckResult check_heatmap_regions() {
    auto corner = [](double bl) {
        SystemSpec s = two_spec(1.0, bl, bl);
        return steady_qfi_numeric(s, kPartial, BathLabel::Common, 1).qfi_beta;
    };
    double threshold = steady_qfi(1.0, 1.0);
    double cold = corner(5.0), hot = corner(0.5);
    bool pass = cold > threshold && hot < threshold;
    return {"heatmap-regions", pass,
            "F(5,5) = " + fmt(cold) + " > " + fmt(threshold) + " > F(0.5,0.5) = " + fmt(hot)};
}

CheckResult check_remote_sensing() {
    std::vector<double> ts = linspace(1.0, 40000.0, 160);
    SystemSpec s = two_spec(1.0, 0.1, 1.0);
    double p_sample = peak(series(s, kPartial, BathLabel::Local1, ts, 2));
    double p_probe_bath = peak(series(s, kPartial, BathLabel::Local2, ts, 1));
    SystemSpec det = two_spec(1.0, 0.1, 1.0, 0.5);
    double p_detuned = peak(series(det, kPartial, BathLabel::Local1, ts, 2));
    double asym = p_sample / p_probe_bath;
    double collapse = p_sample / p_detuned;
    bool pass = asym >= 5.0 && collapse >= 10.0;
    return {"remote-sensing", pass,
            "asymmetry factor = " + fmt(asym) + " (>= 5), detuning collapse = " + fmt(collapse) +
                " (>= 10)"};
}

CheckResult check_lamb_ablation() {
    std::vector<double> ts = linspace(1.0, 40000.0, 160);
    SystemSpec s = two_spec(1.0, 0.1, 1.0);
    double with_ls = peak(series(s, kPartial, BathLabel::Local1, ts, 2));
    ApproximationVariant no_ls = kPartial;
    no_ls.lamb_shift = false;
    double without = peak(series(s, no_ls, BathLabel::Local1, ts, 2));
    double frac = without / with_ls;
    return {"lamb-ablation", frac < 0.2,
            "peak without H_LS / with H_LS = " + fmt(frac) + " (< 0.2)"};
}

CheckResult check_coupling_enhancement() {
    std::vector<double> ts = linspace(1.0, 40000.0, 160);
    auto run = [&](double k, std::size_t* at) {
        SystemSpec s = two_spec(1.0, 0.1, 1.0, 0.01, k);
        std::vector<double> f = series(s, kPartial, BathLabel::Local1, ts, 2);
        return peak(f, at);
    };
    std::size_t at_weak = 0, at_mid = 0, at_strong = 0;
    double p_weak = run(1e-4, &at_weak);
    double p_mid = run(1e-2, &at_mid);
    double p_strong = run(1e-1, &at_strong);
    (void)p_mid;
    bool pass = p_strong > p_weak && ts[at_mid] < ts[at_weak];
    return {"coupling-enhancement", pass,
            "peak(k=0.1) = " + fmt(p_strong) + " vs peak(k=1e-4) = " + fmt(p_weak) +
                "; first peak t(k=1e-2) = " + fmt(ts[at_mid]) + " vs t(k=1e-4) = " +
                fmt(ts[at_weak])};
}

CheckResult check_steady_coupled_sweep() {
    SystemSpec s = two_spec(5.0, 1.0, 5.0, 0.01, 0.1);
    double f = steady_qfi_numeric(s, kPartial, BathLabel::Local1, 2).qfi_beta;
    return {"steady-coupled-sweep", f >= 0.2,
            "steady F for the sample bath at beta = 1 is " + fmt(f) + " (>= 0.2)"};
}

CheckResult check_dephasing() {
    std::vector<double> ts = linspace(1.0, 40000.0, 160);
    double worst = -1.0;
    {
        SystemSpec plain = two_spec(1.0, std::nullopt, std::nullopt);
        SystemSpec deph = two_spec(1.0, std::nullopt, std::nullopt, 0.01, 0.0, 0.01, 0.01);
        std::vector<double> f0 = series(plain, kPartial, BathLabel::Common, ts, 1);
        std::vector<double> fz = series(deph, kPartial, BathLabel::Common, ts, 1);
        for (std::size_t i = 0; i < ts.size(); ++i) worst = std::max(worst, fz[i] - f0[i]);
    }
    {
        SystemSpec plain = two_spec(1.0, 0.1, 1.0);
        SystemSpec deph = two_spec(1.0, 0.1, 1.0, 0.01, 0.0, 0.01, 0.01);
        std::vector<double> f0 = series(plain, kPartial, BathLabel::Local1, ts, 2);
        std::vector<double> fz = series(deph, kPartial, BathLabel::Local1, ts, 2);
        for (std::size_t i = 0; i < ts.size(); ++i) worst = std::max(worst, fz[i] - f0[i]);
    }
    return {"dephasing", worst <= 1e-10,
            "max pointwise QFI excess with dephasing on = " + fmt(worst) + " (<= 1e-10)"};
}

CheckResult check_property_suite() {
    std::ostringstream why;
    bool pass = true;
    auto fail = [&](const std::string& msg) {
        pass = false;
        if (why.tellp() > 0) why << "; ";
        why << msg;
    };

    // detailed balance of the golden-rule rates
    for (double beta : {0.1, 1.0, 5.0}) {
        for (double w : {0.5, 1.0, 2.0}) {
            SpectralDensity sd;
            double lhs = gamma_rate(w, beta, sd) / gamma_rate(-w, beta, sd);
            double rel = std::abs(lhs - std::exp(beta * w)) / std::exp(beta * w);
            if (rel > 1e-12) fail("detailed balance off by " + fmt(rel));
        }
    }

    struct Scenario {
        std::string name;
        SystemSpec spec;
        ApproximationVariant variant;
        bool gkls;
    };
    std::vector<Scenario> scenarios = {
        {"wide/psa", two_spec(1.0, std::nullopt, std::nullopt, 0.5), kPartial, false},
        {"narrow/psa", two_spec(1.0, std::nullopt, std::nullopt), kPartial, false},
        {"narrow/full", two_spec(1.0, std::nullopt, std::nullopt), kFull, true},
        {"narrow/unified", two_spec(1.0, std::nullopt, std::nullopt), kUnified, true},
        {"remote/psa", two_spec(1.0, 0.1, 1.0), kPartial, false},
        {"coupled/psa", two_spec(1.0, 0.1, 1.0, 0.01, 0.1), kPartial, false},
    };
    std::vector<double> ts = linspace(1.0, 30000.0, 60);

    for (const Scenario& sc : scenarios) {
        LiouvillianModel m = build_model(sc.spec, sc.variant);
        Trajectory tr = evolve_spectral(m, sc.spec.initial_density(), ts);
        double pos_tol = sc.gkls ? 1e-12 : 1e-6;
        for (std::size_t i = 0; i < tr.size(); ++i) {
            if (tr.trace_error[i] >= 1e-9) {
                fail(sc.name + ": trace drift " + fmt(tr.trace_error[i]));
                break;
            }
            if (tr.herm_error[i] >= 1e-10) {
                fail(sc.name + ": hermiticity " + fmt(tr.herm_error[i]));
                break;
            }
            if (tr.min_eig[i] < -pos_tol) {
                fail(sc.name + ": min eigenvalue " + fmt(tr.min_eig[i]));
                break;
            }
        }

        // data-processing inequality and agreement of the two QFI formulas
        BathLabel target = sc.spec.find_bath(BathLabel::Local1) ? BathLabel::Local1
                                                                : BathLabel::Common;
        std::vector<double> sub = linspace(1.0, 30000.0, 20);
        auto full = qfi_trajectory(sc.spec, sc.variant, target, sub, 0, {}, {},
                                   Propagator::Spectral);
        for (int probe : {1, 2}) {
            auto red = qfi_trajectory(sc.spec, sc.variant, target, sub, probe, {}, {},
                                      Propagator::Spectral);
            for (std::size_t i = 0; i < sub.size(); ++i) {
                if (red[i].qfi_beta > full[i].qfi_beta + 1e-9) {
                    fail(sc.name + ": data-processing violated by " +
                         fmt(red[i].qfi_beta - full[i].qfi_beta));
                    break;
                }
            }
        }
    }

    // qfi 2x2 determinant form vs the spectral SLD sum on reduced states
    {
        SystemSpec s = two_spec(1.0, std::nullopt, std::nullopt);
        double h = 1e-4;
        auto model_at = [&](double b) {
            SystemSpec t = s;
            t.baths[0].beta = b;
            return build_model(t, kPartial);
        };
        Trajectory t0 = evolve_spectral(model_at(1.0), s.initial_density(), ts);
        Trajectory tp = evolve_spectral(model_at(1.0 + h), s.initial_density(), ts);
        Trajectory tm = evolve_spectral(model_at(1.0 - h), s.initial_density(), ts);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            Matrix rho = partial_trace(t0.states[i], 1);
            Matrix drho = partial_trace((tp.states[i] - tm.states[i]) / (2.0 * h), 1);
            double a = qfi(rho, drho), b = qfi_spectral(rho, drho);
            if (std::abs(a - b) > 1e-10 * std::max(1.0, std::abs(b)))
                fail("qfi formulas disagree by " + fmt(std::abs(a - b)));
        }
    }

    return {"property-suite", pass, pass ? "all structural properties hold" : why.str()};
}

using CheckFn = std::function<CheckResult()>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"analytic-oracle", check_analytic_oracle},
        {"steady-qfi", check_steady_qfi},
        {"thermalization", check_thermalization},
        {"secular-dichotomy", check_secular_dichotomy},
        {"unified-vs-redfield", check_unified_vs_redfield},
        {"heatmap-regions", check_heatmap_regions},
        {"remote-sensing", check_remote_sensing},
        {"lamb-ablation", check_lamb_ablation},
        {"coupling-enhancement", check_coupling_enhancement},
        {"steady-coupled-sweep", check_steady_coupled_sweep},
        {"dephasing", check_dephasing},
        {"property-suite", check_property_suite},
    };
    return reg;
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& filter) {
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : registry()) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

}  // namespace qtherm::acceptance
