#include "mfris/config_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mfris::cli {

using linkmodel::Architecture;
using linkmodel::db_to_linear;
using linkmodel::dbm_to_watts;
using linkmodel::Scenario;
using linkmodel::SicMode;

namespace {

std::string trim(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

struct Parser {
    const std::string& name;
    int line = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
    }

    double number(const std::string& v) const {
        try {
            size_t pos = 0;
            const double d = std::stod(v, &pos);
            if (pos != v.size()) fail("trailing characters in number '" + v + "'");
            return d;
        } catch (const std::invalid_argument&) {
            fail("expected a number, got '" + v + "'");
        } catch (const std::out_of_range&) {
            fail("number out of range: '" + v + "'");
        }
    }

    long integer(const std::string& v) const {
        const double d = number(v);
        if (d != std::floor(d)) fail("expected an integer, got '" + v + "'");
        return static_cast<long>(d);
    }
};

Scenario parse_scenario(const Parser& p, const std::string& v) {
    if (v == "external") return Scenario::external;
    if (v == "internal") return Scenario::internal;
    p.fail("scenario must be 'external' or 'internal', got '" + v + "'");
}

SicMode parse_sic(const Parser& p, const std::string& v) {
    if (v == "perfect") return SicMode::perfect;
    if (v == "imperfect") return SicMode::imperfect;
    p.fail("sic must be 'perfect' or 'imperfect', got '" + v + "'");
}

Architecture parse_architecture(const Parser& p, const std::string& v) {
    if (v == "mf_ris") return Architecture::mf_ris;
    if (v == "star_ris") return Architecture::star_ris;
    if (v == "active_ris") return Architecture::active_ris;
    p.fail("architecture must be mf_ris, star_ris, or active_ris, got '" + v + "'");
}

SweepVariable parse_sweep_variable(const Parser& p, const std::string& v) {
    if (v == "p_tot_dbm") return SweepVariable::p_tot_dbm;
    if (v == "elements") return SweepVariable::elements;
    if (v == "e_r") return SweepVariable::e_r;
    if (v == "power_allocation") return SweepVariable::power_allocation;
    if (v == "rate") return SweepVariable::rate;
    p.fail("unknown sweep_variable '" + v + "'");
}

SweepOutput parse_output(const Parser& p, const std::string& v) {
    if (v == "sop_exact") return SweepOutput::sop_exact;
    if (v == "sop_asymptotic") return SweepOutput::sop_asymptotic;
    if (v == "sop_mc") return SweepOutput::sop_mc;
    if (v == "throughput_exact") return SweepOutput::throughput_exact;
    if (v == "throughput_mc") return SweepOutput::throughput_mc;
    p.fail("unknown output '" + v + "'");
}

}  // namespace

LoadedConfig parse_config(const std::string& text, const std::string& name) {
    LoadedConfig loaded;
    SystemConfig& cfg = loaded.cfg;
    Parser p{name};

    bool scenario_is_internal = false;
    bool have_sweep = false;
    SweepSpec sweep;

    // Linear-or-level scalar fields: plain key takes the linear value,
    // suffixed key converts from dB / dBm.
    std::map<std::string, std::function<void(double)>> setters;
    auto linear = [&](const std::string& key, double& field) {
        setters[key] = [&field](double v) { field = v; };
    };
    auto with_db = [&](const std::string& key, double& field) {
        linear(key, field);
        setters[key + "_db"] = [&field](double v) { field = db_to_linear(v); };
    };
    auto with_dbm = [&](const std::string& key, double& field) {
        linear(key, field);
        setters[key + "_dbm"] = [&field](double v) { field = dbm_to_watts(v); };
    };

    linear("alpha", cfg.alpha);
    with_db("chi", cfg.chi);
    linear("d_b", cfg.d_b);
    linear("d_e", cfg.d_e);
    linear("R_d", cfg.R_d);
    linear("kappa_b", cfg.kappa_b.kappa);
    linear("kappa_r", cfg.kappa_r.kappa);
    linear("kappa_t", cfg.kappa_t.kappa);
    linear("kappa_e", cfg.kappa_e.kappa);
    linear("a_r", cfg.a_r);
    linear("a_t", cfg.a_t);
    linear("e_r", cfg.e_r);
    linear("e_t", cfg.e_t);
    with_db("beta_r", cfg.beta_r);
    with_db("beta_t", cfg.beta_t);
    with_dbm("sigma_n2", cfg.sigma_n2);
    with_dbm("sigma_e2", cfg.sigma_e2);
    with_dbm("sigma_s2", cfg.sigma_s2);
    linear("varpi", cfg.varpi);
    with_db("omega_ip_r", cfg.omega_ip_r);
    with_db("omega_ip_er", cfg.omega_ip_er);
    with_db("omega_ip_t", cfg.omega_ip_t);
    with_db("omega_ip_rt", cfg.omega_ip_rt);
    linear("R_r", cfg.R_r);
    linear("R_t", cfg.R_t);
    with_dbm("P_b", cfg.P_b);
    with_dbm("P_r", cfg.P_r);
    with_dbm("P_ps", cfg.P_ps);
    with_dbm("P_dc", cfg.P_dc);

    std::istringstream stream(text);
    std::string raw;
    while (std::getline(stream, raw)) {
        ++p.line;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) p.fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) p.fail("empty key");
        if (value.empty()) p.fail("empty value for key '" + key + "'");

        if (auto it = setters.find(key); it != setters.end()) {
            it->second(p.number(value));
        } else if (key == "M") {
            cfg.M = static_cast<int>(p.integer(value));
        } else if (key == "scenario") {
            loaded.scenario.scenario = parse_scenario(p, value);
            scenario_is_internal = loaded.scenario.scenario == Scenario::internal;
        } else if (key == "sic") {
            loaded.scenario.sic = parse_sic(p, value);
        } else if (key == "architecture") {
            loaded.scenario.architecture = parse_architecture(p, value);
        } else if (key == "trials") {
            const long t = p.integer(value);
            if (t < 1) p.fail("trials must be positive");
            loaded.mc.trials = static_cast<std::uint64_t>(t);
        } else if (key == "seed") {
            loaded.mc.seed = static_cast<std::uint64_t>(p.integer(value));
        } else if (key == "partitions") {
            const long n = p.integer(value);
            if (n < 1) p.fail("partitions must be >= 1");
            loaded.mc.partitions = static_cast<int>(n);
        } else if (key == "sweep_variable") {
            sweep.variable = parse_sweep_variable(p, value);
            have_sweep = true;
        } else if (key == "sweep_values") {
            sweep.values.clear();
            for (const auto& item : split(value, ','))
                sweep.values.push_back(p.number(item));
            have_sweep = true;
        } else if (key == "outputs") {
            sweep.outputs.clear();
            for (const auto& item : split(value, ','))
                sweep.outputs.insert(parse_output(p, item));
        } else if (key == "architectures") {
            sweep.architectures.clear();
            if (value == "all") {
                sweep.architectures = {Architecture::mf_ris, Architecture::star_ris,
                                       Architecture::active_ris};
            } else {
                for (const auto& item : split(value, ','))
                    sweep.architectures.push_back(parse_architecture(p, item));
            }
        } else if (key == "sic_modes") {
            sweep.sic_modes.clear();
            if (value == "both") {
                sweep.sic_modes = {SicMode::imperfect, SicMode::perfect};
            } else {
                for (const auto& item : split(value, ','))
                    sweep.sic_modes.push_back(parse_sic(p, item));
            }
        } else {
            p.fail("unknown key '" + key + "'");
        }
    }

    // Internal runs flip the decode order and the energy split unless the
    // file set them explicitly; detect "explicit" by comparing against the
    // external defaults.
    if (scenario_is_internal) {
        const SystemConfig ext_defaults;
        if (cfg.a_r == ext_defaults.a_r && cfg.a_t == ext_defaults.a_t) {
            cfg.a_r = 0.9;
            cfg.a_t = 0.1;
        }
        if (cfg.e_r == ext_defaults.e_r && cfg.e_t == ext_defaults.e_t) {
            cfg.e_r = 0.2;
            cfg.e_t = 0.8;
        }
    }

    cfg.validate(loaded.scenario.scenario);
    if (have_sweep) {
        if (sweep.outputs.empty())
            sweep.outputs = {SweepOutput::sop_exact, SweepOutput::sop_mc,
                             SweepOutput::throughput_exact};
        sweep.scenario = loaded.scenario;
        sweep.validate();
        loaded.sweep = sweep;
    }
    return loaded;
}

LoadedConfig load_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("config file not found: " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_config(buffer.str(), path);
}

}  // namespace mfris::cli
