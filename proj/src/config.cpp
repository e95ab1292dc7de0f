#include "qtherm/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qtherm {
namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

class KeyStore {
public:
    void insert(const std::string& key, const std::string& value, int line) {
        if (entries_.count(key))
            throw std::invalid_argument("duplicate key '" + key + "' (line " +
                                        std::to_string(line) + ")");
        entries_[key] = value;
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::string take(const std::string& key, const std::string& fallback) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return fallback;
        std::string v = it->second;
        entries_.erase(it);
        return v;
    }

    double take_double(const std::string& key, double fallback) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return fallback;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(it->second, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("key '" + key + "': not a number: " + it->second);
        }
        if (pos != it->second.size())
            throw std::invalid_argument("key '" + key + "': trailing junk: " + it->second);
        entries_.erase(it);
        return v;
    }

    int take_int(const std::string& key, int fallback) {
        double v = take_double(key, fallback);
        if (v != std::floor(v)) throw std::invalid_argument("key '" + key + "' must be integer");
        return static_cast<int>(v);
    }

    bool take_bool(const std::string& key, bool fallback) {
        std::string v = take(key, fallback ? "true" : "false");
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        throw std::invalid_argument("key '" + key + "': expected a boolean, got " + v);
    }

    void reject_leftovers() const {
        if (entries_.empty()) return;
        std::string msg = "unknown config key(s):";
        for (const auto& [k, v] : entries_) msg += " " + k;
        throw std::invalid_argument(msg);
    }

private:
    std::map<std::string, std::string> entries_;
};

void read_bath(KeyStore& ks, const std::string& name, BathLabel label, double cutoff,
               std::vector<BathSpec>& out) {
    std::string prefix = "bath." + name + ".";
    if (!ks.has(prefix + "beta")) {
        // still consume stray keys so that they error out below as unknown
        return;
    }
    BathSpec b;
    b.label = label;
    b.beta = ks.take_double(prefix + "beta", 1.0);
    b.mu_x = ks.take_double(prefix + "mu_x", 0.01);
    b.mu_z = ks.take_double(prefix + "mu_z", 0.0);
    b.spectral.cutoff = cutoff;
    out.push_back(b);
}

SweepRange read_range(KeyStore& ks, const std::string& prefix, SweepRange def) {
    SweepRange r = def;
    r.lo = ks.take_double(prefix + ".min", r.lo);
    r.hi = ks.take_double(prefix + ".max", r.hi);
    r.n = ks.take_int(prefix + ".n", r.n);
    std::string sp = ks.take(prefix + ".spacing", r.log_spaced ? "log" : "linear");
    if (sp == "log") r.log_spaced = true;
    else if (sp == "linear") r.log_spaced = false;
    else throw std::invalid_argument(prefix + ".spacing must be linear or log");
    return r;
}

}  // namespace

std::vector<double> SweepRange::values() const {
    if (n < 1) throw std::invalid_argument("sweep needs at least one point");
    if (n == 1) return {lo};
    if (hi <= lo) throw std::invalid_argument("sweep max must exceed min");
    if (log_spaced && lo <= 0.0) throw std::invalid_argument("log sweep needs min > 0");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        double f = static_cast<double>(i) / (n - 1);
        v[i] = log_spaced ? lo * std::pow(hi / lo, f) : lo + f * (hi - lo);
    }
    return v;
}

void ScenarioConfig::validate() const {
    system.validate();
    if (!system.find_bath(target.bath))
        throw std::invalid_argument("estimation target refers to a bath not in the system");
    if (target.probe < 0 || target.probe > system.n_qubits)
        throw std::invalid_argument("probe out of range");
}

ScenarioConfig parse_config_text(const std::string& text) {
    KeyStore ks;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": empty key or value");
        ks.insert(key, value, lineno);
    }

    ScenarioConfig cfg;
    cfg.system.n_qubits = ks.take_int("system.n_qubits", 2);
    cfg.system.omega1 = ks.take_double("system.omega1", 1.0);
    cfg.system.omega2 = ks.take_double("system.omega2", 1.0);
    cfg.system.k = ks.take_double("system.k", 0.0);
    std::string init = ks.take("system.initial_state", "plus_plus");
    if (init == "plus_plus") cfg.system.initial_state = InitialState::PlusPlus;
    else if (init == "excited") cfg.system.initial_state = InitialState::ExcitedExcited;
    else if (init == "single_excited") cfg.system.initial_state = InitialState::SingleExcited;
    else if (init == "ground") cfg.system.initial_state = InitialState::Ground;
    else throw std::invalid_argument("system.initial_state: unknown value " + init);

    double cutoff = ks.take_double("bath.cutoff", 20.0);
    read_bath(ks, "common", BathLabel::Common, cutoff, cfg.system.baths);
    read_bath(ks, "local1", BathLabel::Local1, cutoff, cfg.system.baths);
    read_bath(ks, "local2", BathLabel::Local2, cutoff, cfg.system.baths);

    std::string sec = ks.take("variant.secular", "partial");
    if (sec == "partial") cfg.variant.secular = Secular::Partial;
    else if (sec == "full") cfg.variant.secular = Secular::Full;
    else throw std::invalid_argument("variant.secular must be partial or full");
    std::string sch = ks.take("variant.scheme", "redfield");
    if (sch == "redfield") cfg.variant.scheme = CoefficientScheme::Redfield;
    else if (sch == "unified") cfg.variant.scheme = CoefficientScheme::Unified;
    else throw std::invalid_argument("variant.scheme must be redfield or unified");
    cfg.variant.lamb_shift = ks.take_bool("variant.lamb_shift", true);
    cfg.variant.secular_cutoff = ks.take_double("variant.secular_cutoff", -1.0);

    std::string tb = ks.take("target.bath", "common");
    if (tb == "common") cfg.target.bath = BathLabel::Common;
    else if (tb == "local1") cfg.target.bath = BathLabel::Local1;
    else if (tb == "local2") cfg.target.bath = BathLabel::Local2;
    else throw std::invalid_argument("target.bath must be common, local1, or local2");
    cfg.target.probe = ks.take_int("target.probe", 0);

    cfg.grid.t_start = ks.take_double("grid.t_start", 0.0);
    cfg.grid.t_end = ks.take_double("grid.t_end", 100.0);
    cfg.grid.n_points = ks.take_int("grid.n_points", 201);
    std::string gs = ks.take("grid.spacing", "linear");
    if (gs == "linear") cfg.grid.spacing = TimeGrid::Spacing::Linear;
    else if (gs == "log") cfg.grid.spacing = TimeGrid::Spacing::Log;
    else throw std::invalid_argument("grid.spacing must be linear or log");

    cfg.sweep = read_range(ks, "sweep", SweepRange{0.25, 8.0, 21, true});
    cfg.heat_axis1 = read_range(ks, "heatmap.axis1", SweepRange{0.25, 8.0, 21, true});
    cfg.heat_axis2 = read_range(ks, "heatmap.axis2", SweepRange{0.25, 8.0, 21, true});
    cfg.output_prefix = ks.take("output.prefix", "run");

    ks.reject_leftovers();
    cfg.validate();
    return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    try {
        return parse_config_text(ss.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace qtherm
