#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mfris/config_io.hpp"
#include "mfris/sweep.hpp"

using namespace mfris::cli;
using mfris::analysis::QuadOrders;
using mfris::analysis::Quadratures;
using mfris::linkmodel::Architecture;
using mfris::linkmodel::Scenario;
using mfris::linkmodel::SicMode;

namespace {

const Quadratures& small_rules() {
    static const Quadratures rules = Quadratures::make({32, 48, 48, 32, 32, 48});
    return rules;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (line.size() && line.back() == ',') cells.push_back("");
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("defaults match the reference operating point") {
    const LoadedConfig loaded = parse_config("");
    CHECK(loaded.cfg.alpha == doctest::Approx(2.2));
    CHECK(loaded.cfg.chi == doctest::Approx(1e-3));
    CHECK(loaded.cfg.R_d == doctest::Approx(20.0));
    CHECK(loaded.cfg.d_b == doctest::Approx(200.0));
    CHECK(loaded.cfg.d_e == doctest::Approx(15.0));
    CHECK(loaded.cfg.omega_ip_r ==
          doctest::Approx(std::pow(10.0, -126.13 / 10.0)).epsilon(1e-6));
    CHECK(loaded.cfg.sigma_n2 == doctest::Approx(1e-12));
    CHECK(loaded.cfg.sigma_s2 == doctest::Approx(1e-11));
    CHECK(loaded.cfg.kappa_e.kappa == 0.0);
    CHECK(loaded.scenario.scenario == Scenario::external);
}

TEST_CASE("dB and dBm suffixed keys convert at the boundary") {
    const LoadedConfig loaded = parse_config(
        "chi_db = -30\n"
        "beta_r_db = 10\n"
        "sigma_n2_dbm = -90\n"
        "P_b_dbm = 30\n"
        "omega_ip_r_db = -126.13\n");
    CHECK(loaded.cfg.chi == doctest::Approx(1e-3));
    CHECK(loaded.cfg.beta_r == doctest::Approx(10.0));
    CHECK(loaded.cfg.sigma_n2 == doctest::Approx(1e-12));
    CHECK(loaded.cfg.P_b == doctest::Approx(1.0));
    CHECK(loaded.cfg.omega_ip_r == doctest::Approx(2.437811e-13).epsilon(1e-6));
}

TEST_CASE("constraint violations name the field and rule") {
    CHECK_THROWS_WITH_AS(parse_config("a_r = 0.6\na_t = 0.5\n"), "a_r + a_t must equal 1",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_config("varpi = 1.5\n"), "varpi must lie in [0, 1]",
                         std::invalid_argument);
}

TEST_CASE("parse errors carry the line number") {
    try {
        parse_config("alpha = 2.2\nnot a key value\n", "broken.cfg");
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("broken.cfg:2") == 0);
    }
    try {
        parse_config("alpha = fast\n", "broken.cfg");
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("broken.cfg:1") == 0);
    }
    CHECK_THROWS_AS(parse_config("unknown_field = 3\n"), std::runtime_error);
}

TEST_CASE("missing config file") {
    CHECK_THROWS_AS(load_config("/nonexistent/path.cfg"), std::runtime_error);
}

TEST_CASE("internal scenario flips allocation defaults") {
    const LoadedConfig loaded = parse_config("scenario = internal\n");
    CHECK(loaded.cfg.a_r == doctest::Approx(0.9));
    CHECK(loaded.cfg.e_t == doctest::Approx(0.8));
    // explicit values win
    const LoadedConfig expl = parse_config("scenario = internal\na_r = 0.8\na_t = 0.2\n");
    CHECK(expl.cfg.a_r == doctest::Approx(0.8));
}

TEST_CASE("sweep spec validation") {
    SweepSpec spec;
    spec.values = {};
    spec.outputs = {SweepOutput::sop_exact};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.values = {1.0, 3.0, 2.0};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.values = {3.0, 2.0, 1.0};
    CHECK_NOTHROW(spec.validate());
}

TEST_CASE("empty table emits the header only") {
    const std::string csv = csv_string({}, {SweepOutput::sop_exact});
    CHECK(csv == "sweep_value,architecture,sic,sop_exact,sop_asym,sop_mc,mc_stderr,throughput\n");
}

TEST_CASE("single-point sweep produces one row per architecture and SIC mode") {
    SweepSpec spec;
    spec.variable = SweepVariable::p_tot_dbm;
    spec.values = {30.0};
    spec.scenario = {Scenario::external, SicMode::imperfect, Architecture::mf_ris};
    spec.outputs = {SweepOutput::sop_exact};
    spec.architectures = {Architecture::mf_ris};
    spec.sic_modes = {SicMode::imperfect};
    const auto rows = run_sweep(spec, SystemConfig{}, McConfig{}, small_rules());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].value == 30.0);
    CHECK(std::isfinite(rows[0].sop_exact));
}

TEST_CASE("budget sweep covers architectures x points x sic modes") {
    SweepSpec spec;
    spec.variable = SweepVariable::p_tot_dbm;
    spec.values = {20.0, 30.0, 40.0};
    spec.scenario = {Scenario::external, SicMode::imperfect, Architecture::mf_ris};
    spec.outputs = {SweepOutput::sop_exact, SweepOutput::throughput_exact};
    spec.architectures = {Architecture::mf_ris, Architecture::star_ris, Architecture::active_ris};
    spec.sic_modes = {SicMode::imperfect, SicMode::perfect};
    const auto rows = run_sweep(spec, SystemConfig{}, McConfig{}, small_rules());
    CHECK(rows.size() == 3 * 3 * 2);

    const std::string csv = csv_string(rows, spec.outputs);
    const auto cells = parse_csv(csv);
    REQUIRE(cells.size() == rows.size() + 1);
    CHECK(cells[0].size() == 8);
    // unrequested outputs stay empty
    for (size_t i = 1; i < cells.size(); ++i) {
        CHECK(cells[i][4].empty());  // sop_asym
        CHECK(cells[i][5].empty());  // sop_mc
        CHECK_FALSE(cells[i][3].empty());
        CHECK_FALSE(cells[i][7].empty());
    }
}

TEST_CASE("sweep CSV is byte-identical across runs and partition counts") {
    SweepSpec spec;
    spec.variable = SweepVariable::p_tot_dbm;
    spec.values = {25.0, 30.0};
    spec.scenario = {Scenario::external, SicMode::imperfect, Architecture::mf_ris};
    spec.outputs = {SweepOutput::sop_exact, SweepOutput::sop_mc};
    spec.architectures = {Architecture::mf_ris};
    spec.sic_modes = {SicMode::imperfect};

    McConfig mc;
    mc.trials = 20000;
    mc.seed = 9;
    mc.partitions = 1;
    const std::string first = csv_string(run_sweep(spec, SystemConfig{}, mc, small_rules()),
                                         spec.outputs);
    const std::string second = csv_string(run_sweep(spec, SystemConfig{}, mc, small_rules()),
                                          spec.outputs);
    CHECK(first == second);
    mc.partitions = 8;
    const std::string partitioned = csv_string(run_sweep(spec, SystemConfig{}, mc, small_rules()),
                                               spec.outputs);
    CHECK(first == partitioned);
}

TEST_CASE("csv round-trip preserves the printed values") {
    SweepSpec spec;
    spec.variable = SweepVariable::elements;
    spec.values = {8, 12};
    spec.scenario = {Scenario::external, SicMode::imperfect, Architecture::mf_ris};
    spec.outputs = {SweepOutput::sop_exact};
    spec.architectures = {Architecture::mf_ris};
    spec.sic_modes = {SicMode::perfect};
    const auto rows = run_sweep(spec, SystemConfig{}, McConfig{}, small_rules());
    const std::string csv = csv_string(rows, spec.outputs);
    const auto cells = parse_csv(csv);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(std::stod(cells[i + 1][0]) == rows[i].value);
        const double reparsed = std::stod(cells[i + 1][3]);
        CHECK(reparsed == doctest::Approx(rows[i].sop_exact).epsilon(1e-7));
    }

    // writing to disk round-trips byte-for-byte
    const std::string path = "roundtrip_test.csv";
    emit_csv(rows, spec.outputs, path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == csv);
    std::remove(path.c_str());
}

TEST_CASE("infeasible power budgets become certain-outage rows") {
    SweepSpec spec;
    spec.variable = SweepVariable::p_tot_dbm;
    spec.values = {0.0};  // 1 mW cannot cover the circuit power
    spec.scenario = {Scenario::external, SicMode::imperfect, Architecture::mf_ris};
    spec.outputs = {SweepOutput::sop_exact};
    spec.architectures = {Architecture::mf_ris};
    spec.sic_modes = {SicMode::imperfect};
    const auto rows = run_sweep(spec, SystemConfig{}, McConfig{}, small_rules());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].infeasible_budget);
    CHECK(rows[0].sop_exact == 1.0);
    CHECK(rows[0].throughput == 0.0);
}

TEST_CASE("sweep config parses into a runnable spec") {
    const LoadedConfig loaded = parse_config(
        "scenario = external\n"
        "sweep_variable = p_tot_dbm\n"
        "sweep_values = 20, 25, 30\n"
        "outputs = sop_exact, sop_mc\n"
        "architectures = all\n"
        "sic_modes = both\n"
        "trials = 50000\n"
        "seed = 7\n");
    REQUIRE(loaded.sweep.has_value());
    CHECK(loaded.sweep->values.size() == 3);
    CHECK(loaded.sweep->architectures.size() == 3);
    CHECK(loaded.sweep->sic_modes.size() == 2);
    CHECK(loaded.mc.trials == 50000);
    CHECK(loaded.mc.seed == 7);
}
