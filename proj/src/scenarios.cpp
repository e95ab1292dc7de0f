#include "qtherm/scenarios.hpp"

#include "qtherm/analytic.hpp"

#include <atomic>
#include <filesystem>
#include <mutex>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qtherm {
namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::ofstream open_csv(const std::string& out_dir, const std::string& name) {
    std::filesystem::create_directories(out_dir);
    std::filesystem::path p = std::filesystem::path(out_dir) / name;
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    return f;
}

// Bounded worker pool over grid cells; each cell writes only its own slot.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    failed.store(true);
                    std::lock_guard<std::mutex> lk(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<QfiSample> run_transient(const ScenarioConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    std::vector<QfiSample> series =
        qfi_trajectory(cfg.system, cfg.variant, cfg.target.bath, cfg.grid.times(),
                       cfg.target.probe);
    if (!out_dir.empty()) {
        std::ofstream f = open_csv(out_dir, cfg.output_prefix + "_transient.csv");
        f << "t,qfi_beta,qfi_T,trace_err,min_eig\n";
        for (const QfiSample& s : series)
            f << fmt(s.t) << ',' << fmt(s.qfi_beta) << ',' << fmt(s.qfi_temperature) << ','
              << fmt(s.trace_error) << ',' << fmt(s.min_eig) << '\n';
    }
    return series;
}

std::vector<SteadyPoint> run_steady_sweep(const ScenarioConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    std::vector<double> betas = cfg.sweep.values();
    std::vector<SteadyPoint> points(betas.size());
    parallel_for(betas.size(), [&](std::size_t i) {
        SystemSpec sys = cfg.system;
        for (BathSpec& b : sys.baths)
            if (b.label == cfg.target.bath) b.beta = betas[i];
        QfiSample s = steady_qfi_numeric(sys, cfg.variant, cfg.target.bath, cfg.target.probe);
        points[i] = {betas[i], s.qfi_beta, s.qfi_temperature,
                     relative_error(betas[i], s.qfi_beta)};
    });
    if (!out_dir.empty()) {
        std::ofstream f = open_csv(out_dir, cfg.output_prefix + "_steady.csv");
        f << "beta,qfi_beta,qfi_T,rel_error\n";
        for (const SteadyPoint& p : points)
            f << fmt(p.beta) << ',' << fmt(p.qfi_beta) << ',' << fmt(p.qfi_temperature) << ','
              << fmt(p.rel_error) << '\n';
    }
    return points;
}

HeatmapResult run_heatmap(const ScenarioConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    const BathSpec* common = cfg.system.find_bath(BathLabel::Common);
    if (!common) throw std::invalid_argument("heatmap needs a common bath");
    if (!cfg.system.find_bath(BathLabel::Local1) || !cfg.system.find_bath(BathLabel::Local2))
        throw std::invalid_argument("heatmap needs both local baths");

    HeatmapResult res;
    // Reference: the single-qubit steady value without local baths.
    res.threshold = steady_qfi(cfg.system.omega1, common->beta);

    std::vector<double> a1 = cfg.heat_axis1.values();
    std::vector<double> a2 = cfg.heat_axis2.values();
    res.cells.resize(a1.size() * a2.size());
    parallel_for(res.cells.size(), [&](std::size_t idx) {
        std::size_t i = idx / a2.size(), j = idx % a2.size();
        SystemSpec sys = cfg.system;
        for (BathSpec& b : sys.baths) {
            if (b.label == BathLabel::Local1) b.beta = a1[i];
            if (b.label == BathLabel::Local2) b.beta = a2[j];
        }
        QfiSample s = steady_qfi_numeric(sys, cfg.variant, BathLabel::Common, cfg.target.probe);
        res.cells[idx] = {a1[i], a2[j], s.qfi_beta, s.qfi_beta > res.threshold ? 1 : 2};
    });

    if (!out_dir.empty()) {
        std::ofstream f = open_csv(out_dir, cfg.output_prefix + "_heatmap.csv");
        f << "beta_l1,beta_l2,qfi_beta,region\n";
        for (const HeatmapCell& c : res.cells)
            f << fmt(c.beta_l1) << ',' << fmt(c.beta_l2) << ',' << fmt(c.qfi_beta) << ','
              << c.region << '\n';
    }
    return res;
}

}  // namespace qtherm
