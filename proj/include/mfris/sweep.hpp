#pragma once

#include <limits>
#include <set>
#include <string>
#include <vector>

#include "mfris/monte_carlo.hpp"
#include "mfris/sop_analysis.hpp"
#include "mfris/system_config.hpp"

namespace mfris::cli {

using analysis::Quadratures;
using linkmodel::Architecture;
using linkmodel::ScenarioSpec;
using linkmodel::SicMode;
using linkmodel::SystemConfig;
using montecarlo::McConfig;

enum class SweepVariable { p_tot_dbm, elements, e_r, power_allocation, rate };
enum class SweepOutput { sop_exact, sop_asymptotic, sop_mc, throughput_exact, throughput_mc };

std::string to_string(SweepVariable v);

// One experiment: sweep a single variable over ordered values and emit
// the requested outputs for every architecture x SIC mode combination.
struct SweepSpec {
    SweepVariable variable = SweepVariable::p_tot_dbm;
    std::vector<double> values;
    ScenarioSpec scenario;
    std::set<SweepOutput> outputs;
    std::vector<Architecture> architectures{Architecture::mf_ris};
    std::vector<SicMode> sic_modes{SicMode::imperfect, SicMode::perfect};

    void validate() const;
};

// External rows carry the NOMA pair's system quantities (outage of either
// user); internal rows carry the refraction user's.
struct SweepRow {
    double value = 0.0;
    Architecture architecture = Architecture::mf_ris;
    SicMode sic = SicMode::imperfect;
    double sop_exact = std::numeric_limits<double>::quiet_NaN();
    double sop_asym = std::numeric_limits<double>::quiet_NaN();
    double sop_mc = std::numeric_limits<double>::quiet_NaN();
    double mc_stderr = std::numeric_limits<double>::quiet_NaN();
    double throughput = std::numeric_limits<double>::quiet_NaN();
    bool infeasible_budget = false;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SystemConfig& base,
                                const McConfig& mc, const Quadratures& rules);

// CSV with the fixed column order
// sweep_value,architecture,sic,sop_exact,sop_asym,sop_mc,mc_stderr,throughput
// and 8-significant-digit values; cells of outputs that were not
// requested stay empty.
std::string csv_string(const std::vector<SweepRow>& rows, const std::set<SweepOutput>& outputs);

void emit_csv(const std::vector<SweepRow>& rows, const std::set<SweepOutput>& outputs,
              const std::string& path);

}  // namespace mfris::cli
