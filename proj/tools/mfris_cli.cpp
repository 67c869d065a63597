#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfris/config_io.hpp"
#include "mfris/link_model.hpp"
#include "mfris/monte_carlo.hpp"
#include "mfris/quadrature.hpp"
#include "mfris/sop_analysis.hpp"
#include "mfris/special_functions.hpp"
#include "mfris/sweep.hpp"

namespace {

using namespace mfris;
using analysis::QuadOrders;
using analysis::Quadratures;
using analysis::SopResult;
using cli::LoadedConfig;
using linkmodel::Scenario;
using linkmodel::ScenarioSpec;
using linkmodel::SicMode;
using linkmodel::SystemConfig;
using montecarlo::McConfig;
using montecarlo::McEstimate;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitValidationFailure = 2;

QuadOrders parse_orders(const std::string& csv) {
    QuadOrders orders;
    int vals[6];
    if (std::sscanf(csv.c_str(), "%d,%d,%d,%d,%d,%d", &vals[0], &vals[1], &vals[2], &vals[3],
                    &vals[4], &vals[5]) != 6)
        throw std::runtime_error("--orders expects six integers W,S,D,N,I,X");
    orders.W = vals[0];
    orders.S = vals[1];
    orders.D = vals[2];
    orders.N = vals[3];
    orders.I = vals[4];
    orders.X = vals[5];
    return orders;
}

struct PointReport {
    std::string label;
    double analytic;
    std::optional<McEstimate> mc;
};

void print_reports(const std::vector<PointReport>& reports) {
    for (const auto& r : reports) {
        std::printf("%-24s analytic=%.8g", r.label.c_str(), r.analytic);
        if (r.mc)
            std::printf("  mc=%.8g  stderr=%.3g  trials=%llu", r.mc->p_hat, r.mc->stderr_,
                        static_cast<unsigned long long>(r.mc->trials));
        std::printf("\n");
    }
}

int cmd_analyze(const LoadedConfig& loaded, const Quadratures& rules, bool with_mc) {
    const ScenarioSpec& sc = loaded.scenario;
    const SystemConfig cfg = linkmodel::map_architecture(sc, loaded.cfg);
    std::vector<PointReport> reports;

    auto mc_est = [&](montecarlo::McTarget target) -> std::optional<McEstimate> {
        if (!with_mc) return std::nullopt;
        return montecarlo::estimate_sop(sc, cfg, loaded.mc, target);
    };

    if (sc.scenario == Scenario::external) {
        const SopResult r = sc.sic == SicMode::imperfect ? analysis::sop_ext_r_ipsic(cfg, rules)
                                                         : analysis::sop_ext_r_psic(cfg, rules);
        const SopResult t = analysis::sop_ext_t(cfg, rules);
        reports.push_back({"sop_reflect_user", r.value, mc_est(montecarlo::McTarget::reflect_user)});
        reports.push_back({"sop_refract_user", t.value, mc_est(montecarlo::McTarget::refract_user)});
        reports.push_back({"throughput_reflect", analysis::secrecy_throughput(r.value, cfg.R_r),
                           std::nullopt});
        reports.push_back({"throughput_refract", analysis::secrecy_throughput(t.value, cfg.R_t),
                           std::nullopt});
    } else {
        const SopResult t = analysis::sop_int_t(cfg, rules, sc.sic);
        reports.push_back({"sop_refract_user", t.value, mc_est(montecarlo::McTarget::refract_user)});
        reports.push_back({"throughput_refract", analysis::secrecy_throughput(t.value, cfg.R_t),
                           std::nullopt});
    }
    print_reports(reports);
    return kExitOk;
}

int cmd_sweep(const LoadedConfig& loaded, const Quadratures& rules, const std::string& out_path) {
    if (!loaded.sweep)
        throw std::runtime_error("config has no sweep definition (sweep_variable / sweep_values)");
    const auto rows = cli::run_sweep(*loaded.sweep, loaded.cfg, loaded.mc, rules);
    const std::string csv = cli::csv_string(rows, loaded.sweep->outputs);
    if (out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        cli::emit_csv(rows, loaded.sweep->outputs, out_path);
        std::printf("wrote %zu rows to %s\n", rows.size(), out_path.c_str());
    }
    return kExitOk;
}

bool within_mc_tolerance(double analytic, const McEstimate& mc) {
    return std::abs(analytic - mc.p_hat) <= std::max(4.0 * mc.stderr_, 0.10 * mc.p_hat);
}

int cmd_validate(const LoadedConfig& loaded, const Quadratures& rules) {
    const ScenarioSpec& sc = loaded.scenario;
    bool all_ok = true;

    struct Check {
        std::string label;
        double analytic;
        McEstimate mc;
    };
    std::vector<Check> checks;

    if (sc.scenario == Scenario::external) {
        const SystemConfig cfg = linkmodel::map_architecture(sc, loaded.cfg);
        ScenarioSpec ip{sc.scenario, SicMode::imperfect, sc.architecture};
        ScenarioSpec pf{sc.scenario, SicMode::perfect, sc.architecture};
        checks.push_back({"ext_r_ipsic", analysis::sop_ext_r_ipsic(cfg, rules).value,
                          montecarlo::estimate_sop(ip, cfg, loaded.mc, montecarlo::McTarget::reflect_user)});
        checks.push_back({"ext_r_psic", analysis::sop_ext_r_psic(cfg, rules).value,
                          montecarlo::estimate_sop(pf, cfg, loaded.mc, montecarlo::McTarget::reflect_user)});
        checks.push_back({"ext_t", analysis::sop_ext_t(cfg, rules).value,
                          montecarlo::estimate_sop(ip, cfg, loaded.mc, montecarlo::McTarget::refract_user)});
    } else {
        const SystemConfig cfg = linkmodel::map_architecture(sc, loaded.cfg);
        ScenarioSpec ip{sc.scenario, SicMode::imperfect, sc.architecture};
        ScenarioSpec pf{sc.scenario, SicMode::perfect, sc.architecture};
        checks.push_back({"int_t_ipsic", analysis::sop_int_t(cfg, rules, SicMode::imperfect).value,
                          montecarlo::estimate_sop(ip, cfg, loaded.mc, montecarlo::McTarget::refract_user)});
        checks.push_back({"int_t_psic", analysis::sop_int_t(cfg, rules, SicMode::perfect).value,
                          montecarlo::estimate_sop(pf, cfg, loaded.mc, montecarlo::McTarget::refract_user)});
    }

    for (const auto& c : checks) {
        if (c.mc.p_hat < 1e-3 || c.mc.p_hat > 0.9) {
            std::printf("[skip] %-12s analytic=%.6g mc=%.6g (outside comparison window)\n",
                        c.label.c_str(), c.analytic, c.mc.p_hat);
            continue;
        }
        const bool ok = within_mc_tolerance(c.analytic, c.mc);
        all_ok = all_ok && ok;
        std::printf("[%s] %-12s analytic=%.6g mc=%.6g stderr=%.3g\n", ok ? "pass" : "FAIL",
                    c.label.c_str(), c.analytic, c.mc.p_hat, c.mc.stderr_);
    }
    return all_ok ? kExitOk : kExitValidationFailure;
}

int cmd_selftest(const QuadOrders& orders) {
    using namespace mfris::numerics;
    bool ok = true;
    auto check = [&ok](const std::string& label, double got, double want, double tol) {
        const bool pass = std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
        ok = ok && pass;
        std::printf("[%s] %-28s got=%.12g want=%.12g\n", pass ? "pass" : "FAIL", label.c_str(), got,
                    want);
    };

    check("gamma(5)", gamma_fn(5.0), 24.0, 1e-12);
    check("gamma(0.5)", gamma_fn(0.5), std::sqrt(M_PI), 1e-12);
    check("inc_gamma(1,1)", lower_incomplete_gamma(1.0, 1.0), 1.0 - std::exp(-1.0), 1e-12);
    check("1F1(1;1;0.7)", kummer_1f1(1.0, 1.0, 0.7), std::exp(0.7), 1e-12);
    check("2F1(1,1;2;0.5)", gauss_2f1(1.0, 1.0, 2.0, 0.5), 2.0 * std::log(2.0), 1e-12);
    check("bessel_i0(0)", bessel_i(0, 0.0), 1.0, 1e-14);

    const auto rule = laguerre_rule(orders.X);
    double wsum = 0.0;
    double wxsum = 0.0;
    bool finite = true;
    for (int i = 0; i < rule.order; ++i) {
        wsum += rule.weights[i];
        wxsum += rule.weights[i] * rule.nodes[i];
        finite = finite && std::isfinite(rule.log_weights[i]);
    }
    check("laguerre weight sum", wsum, 1.0, 1e-10);
    check("laguerre first moment", wxsum, 1.0, 1e-10);
    std::printf("[%s] %-28s order=%d\n", finite ? "pass" : "FAIL", "laguerre log weights finite",
                rule.order);
    ok = ok && finite;

    // Convergence self-test: doubling every order must barely change the
    // analytic outputs.
    const Quadratures base = Quadratures::make(orders);
    const Quadratures fine = Quadratures::make(orders.doubled());
    const SystemConfig ext;
    const SystemConfig intl = linkmodel::internal_default_config();
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); };
    const double d1 = rel(analysis::sop_ext_r_ipsic(ext, base).value,
                          analysis::sop_ext_r_ipsic(ext, fine).value);
    const double d2 = rel(analysis::sop_ext_t(ext, base).value,
                          analysis::sop_ext_t(ext, fine).value);
    const double d3 = rel(analysis::sop_int_t(intl, base, SicMode::imperfect).value,
                          analysis::sop_int_t(intl, fine, SicMode::imperfect).value);
    check("order doubling: ext_r", d1, 0.0, 1e-4);
    check("order doubling: ext_t", d2, 0.0, 1e-4);
    check("order doubling: int_t", d3, 0.0, 1e-4);

    return ok ? kExitOk : kExitValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy-outage analysis of amplifying dual-sided RIS NOMA networks"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string orders_csv;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<int> partitions;
    bool with_mc = false;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", config_path, "config file path");
        if (needs_config) opt->required();
        sub->add_option("--seed", seed, "Monte Carlo seed override");
        sub->add_option("--trials", trials, "Monte Carlo trial count override");
        sub->add_option("--partitions", partitions, "Monte Carlo partition count override");
        sub->add_option("--orders", orders_csv, "quadrature orders W,S,D,N,I,X");
        sub->add_option("--out", out_path, "output CSV path");
    };

    auto* analyze = app.add_subcommand("analyze", "evaluate one operating point");
    analyze->add_flag("--mc", with_mc, "also run the Monte Carlo estimate");
    add_common(analyze, true);
    auto* sweep = app.add_subcommand("sweep", "run the config's parameter sweep");
    add_common(sweep, true);
    auto* validate = app.add_subcommand("validate", "analytic vs Monte Carlo comparison");
    add_common(validate, true);
    auto* selftest = app.add_subcommand("selftest", "special-function and quadrature checks");
    add_common(selftest, false);

    CLI11_PARSE(app, argc, argv);

    try {
        QuadOrders orders;
        if (!orders_csv.empty()) orders = parse_orders(orders_csv);

        if (selftest->parsed()) return cmd_selftest(orders);

        LoadedConfig loaded = cli::load_config(config_path);
        if (seed) loaded.mc.seed = *seed;
        if (trials) loaded.mc.trials = *trials;
        if (partitions) loaded.mc.partitions = *partitions;

        const Quadratures rules = Quadratures::make(orders);
        if (analyze->parsed()) return cmd_analyze(loaded, rules, with_mc);
        if (sweep->parsed()) return cmd_sweep(loaded, rules, out_path);
        if (validate->parsed()) return cmd_validate(loaded, rules);
        return kExitError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
}
