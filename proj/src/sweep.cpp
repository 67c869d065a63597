#include "mfris/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "mfris/link_model.hpp"

namespace mfris::cli {

using analysis::SopResult;
using linkmodel::dbm_to_watts;
using linkmodel::Scenario;
using montecarlo::estimate_from_counts;
using montecarlo::McCounts;
using montecarlo::McEstimate;

std::string to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::p_tot_dbm: return "p_tot_dbm";
        case SweepVariable::elements: return "elements";
        case SweepVariable::e_r: return "e_r";
        case SweepVariable::power_allocation: return "power_allocation";
        case SweepVariable::rate: return "rate";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (values.empty()) throw std::invalid_argument("sweep values must be nonempty");
    bool inc = true;
    bool dec = true;
    for (size_t i = 1; i < values.size(); ++i) {
        inc = inc && values[i] > values[i - 1];
        dec = dec && values[i] < values[i - 1];
    }
    if (values.size() > 1 && !inc && !dec)
        throw std::invalid_argument("sweep values must be strictly monotone");
    if (outputs.empty()) throw std::invalid_argument("sweep outputs must be nonempty");
    if (architectures.empty()) throw std::invalid_argument("sweep needs at least one architecture");
    if (sic_modes.empty()) throw std::invalid_argument("sweep needs at least one SIC mode");
}

namespace {

// Applies the swept variable to the pre-mapping config.
SystemConfig apply_variable(const SweepSpec& spec, const SystemConfig& base, double value) {
    SystemConfig cfg = base;
    switch (spec.variable) {
        case SweepVariable::p_tot_dbm:
            break;  // handled after architecture mapping
        case SweepVariable::elements:
            cfg.M = static_cast<int>(std::lround(value));
            break;
        case SweepVariable::e_r:
            cfg.e_r = value;
            cfg.e_t = 1.0 - value;
            break;
        case SweepVariable::power_allocation:
            cfg.a_r = value;
            cfg.a_t = 1.0 - value;
            break;
        case SweepVariable::rate:
            cfg.R_r = value;
            cfg.R_t = value;
            break;
    }
    return cfg;
}

double combine_pair(double p_r, double p_t) {
    return 1.0 - (1.0 - p_r) * (1.0 - p_t);
}

SweepRow compute_row(const SweepSpec& spec, const SystemConfig& base, const McConfig& mc,
                     const Quadratures& rules, double value, Architecture arch, SicMode sic) {
    SweepRow row;
    row.value = value;
    row.architecture = arch;
    row.sic = sic;

    ScenarioSpec point{spec.scenario.scenario, sic, arch};
    SystemConfig cfg = linkmodel::map_architecture(point, apply_variable(spec, base, value));
    if (spec.variable == SweepVariable::p_tot_dbm) {
        try {
            cfg.P_b = linkmodel::solve_transmit_power(dbm_to_watts(value), cfg);
        } catch (const std::invalid_argument&) {
            // Circuit power already exhausts the budget: nothing can be
            // transmitted, so the secrecy outage is certain.
            row.infeasible_budget = true;
            row.sop_exact = 1.0;
            row.sop_asym = 1.0;
            row.sop_mc = 1.0;
            row.mc_stderr = 0.0;
            row.throughput = 0.0;
            return row;
        }
    }
    cfg.validate(point.scenario);

    const bool want_exact = spec.outputs.count(SweepOutput::sop_exact) ||
                            spec.outputs.count(SweepOutput::throughput_exact);
    const bool want_asym = spec.outputs.count(SweepOutput::sop_asymptotic) > 0;
    const bool want_mc = spec.outputs.count(SweepOutput::sop_mc) ||
                         spec.outputs.count(SweepOutput::throughput_mc);

    if (point.scenario == Scenario::external) {
        double p_r = 0.0;
        double p_t = 0.0;
        if (want_exact) {
            p_r = (sic == SicMode::imperfect ? analysis::sop_ext_r_ipsic(cfg, rules)
                                             : analysis::sop_ext_r_psic(cfg, rules))
                      .value;
            p_t = analysis::sop_ext_t(cfg, rules).value;
            if (spec.outputs.count(SweepOutput::sop_exact)) row.sop_exact = combine_pair(p_r, p_t);
        }
        if (want_asym) {
            const double a_r = (sic == SicMode::imperfect
                                    ? analysis::sop_ext_r_ipsic_asym(cfg, rules)
                                    : analysis::sop_ext_r_psic_asym(cfg, rules))
                                   .value;
            const double a_t = analysis::sop_ext_t_asym(cfg, rules).value;
            row.sop_asym = combine_pair(a_r, a_t);
        }
        McCounts counts;
        if (want_mc) {
            counts = montecarlo::run_trials(point, cfg, mc);
            const McEstimate any = estimate_from_counts(counts.outage_any, counts.trials, counts.seed);
            if (spec.outputs.count(SweepOutput::sop_mc)) {
                row.sop_mc = any.p_hat;
                row.mc_stderr = any.stderr_;
            }
        }
        if (spec.outputs.count(SweepOutput::throughput_exact)) {
            row.throughput = analysis::secrecy_throughput(p_r, cfg.R_r) +
                             analysis::secrecy_throughput(p_t, cfg.R_t);
        } else if (spec.outputs.count(SweepOutput::throughput_mc)) {
            const double mr = static_cast<double>(counts.outage_r) / counts.trials;
            const double mt = static_cast<double>(counts.outage_t) / counts.trials;
            row.throughput = analysis::secrecy_throughput(mr, cfg.R_r) +
                             analysis::secrecy_throughput(mt, cfg.R_t);
        }
    } else {
        double p_t = 0.0;
        if (want_exact) {
            p_t = analysis::sop_int_t(cfg, rules, sic).value;
            if (spec.outputs.count(SweepOutput::sop_exact)) row.sop_exact = p_t;
        }
        if (want_asym) {
            row.sop_asym = (sic == SicMode::imperfect ? analysis::sop_int_t_ipsic_asym(cfg, rules)
                                                      : analysis::sop_int_t_psic_asym(cfg, rules))
                               .value;
        }
        McCounts counts;
        if (want_mc) {
            counts = montecarlo::run_trials(point, cfg, mc);
            const McEstimate est = estimate_from_counts(counts.outage_t, counts.trials, counts.seed);
            if (spec.outputs.count(SweepOutput::sop_mc)) {
                row.sop_mc = est.p_hat;
                row.mc_stderr = est.stderr_;
            }
        }
        if (spec.outputs.count(SweepOutput::throughput_exact)) {
            row.throughput = analysis::secrecy_throughput(p_t, cfg.R_t);
        } else if (spec.outputs.count(SweepOutput::throughput_mc)) {
            const double mt = static_cast<double>(counts.outage_t) / counts.trials;
            row.throughput = analysis::secrecy_throughput(mt, cfg.R_t);
        }
    }
    return row;
}

std::string format_cell(double v, bool requested) {
    if (!requested) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SystemConfig& base,
                                const McConfig& mc, const Quadratures& rules) {
    spec.validate();
    std::vector<SweepRow> rows;
    rows.reserve(spec.values.size() * spec.architectures.size() * spec.sic_modes.size());
    for (const double value : spec.values)
        for (const Architecture arch : spec.architectures)
            for (const SicMode sic : spec.sic_modes)
                rows.push_back(compute_row(spec, base, mc, rules, value, arch, sic));
    return rows;
}

std::string csv_string(const std::vector<SweepRow>& rows, const std::set<SweepOutput>& outputs) {
    const bool has_exact = outputs.count(SweepOutput::sop_exact) > 0;
    const bool has_asym = outputs.count(SweepOutput::sop_asymptotic) > 0;
    const bool has_mc = outputs.count(SweepOutput::sop_mc) > 0;
    const bool has_tp = outputs.count(SweepOutput::throughput_exact) ||
                        outputs.count(SweepOutput::throughput_mc);

    std::string out = "sweep_value,architecture,sic,sop_exact,sop_asym,sop_mc,mc_stderr,throughput\n";
    for (const auto& row : rows) {
        char head[64];
        std::snprintf(head, sizeof(head), "%.8g", row.value);
        out += head;
        out += ',';
        out += linkmodel::to_string(row.architecture);
        out += ',';
        out += linkmodel::to_string(row.sic);
        out += ',';
        out += format_cell(row.sop_exact, has_exact);
        out += ',';
        out += format_cell(row.sop_asym, has_asym);
        out += ',';
        out += format_cell(row.sop_mc, has_mc);
        out += ',';
        out += format_cell(row.mc_stderr, has_mc);
        out += ',';
        out += format_cell(row.throughput, has_tp);
        out += '\n';
    }
    return out;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::set<SweepOutput>& outputs,
              const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << csv_string(rows, outputs);
    if (!file) throw std::runtime_error("write failed: " + path);
}

}  // namespace mfris::cli
