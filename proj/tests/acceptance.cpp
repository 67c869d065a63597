// Acceptance suite: every release criterion in one binary, one verdict
// line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mfris/config_io.hpp"
#include "mfris/link_model.hpp"
#include "mfris/monte_carlo.hpp"
#include "mfris/quadrature.hpp"
#include "mfris/sop_analysis.hpp"
#include "mfris/special_functions.hpp"
#include "mfris/sweep.hpp"

using namespace mfris;
using analysis::AsymKind;
using analysis::QuadOrders;
using analysis::Quadratures;
using analysis::SicMode;
using linkmodel::Architecture;
using linkmodel::dbm_to_watts;
using linkmodel::Scenario;
using linkmodel::ScenarioSpec;
using linkmodel::SystemConfig;
using montecarlo::McConfig;
using montecarlo::McEstimate;
using montecarlo::McTarget;

namespace {

constexpr std::uint64_t kSeed = 20250811;
constexpr std::uint64_t kTrials = 1000000;
constexpr int kPartitions = 8;

const Quadratures& rules() {
    static const Quadratures r = Quadratures::make({});
    return r;
}

void verdict(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    CHECK_MESSAGE(ok, "criterion ", criterion, ": ", detail);
}

SystemConfig external_config(int elements, double p_tot_dbm) {
    SystemConfig cfg;
    cfg.M = elements;
    cfg.P_b = linkmodel::solve_transmit_power(dbm_to_watts(p_tot_dbm), cfg);
    return cfg;
}

SystemConfig internal_config(int elements, double p_tot_dbm) {
    SystemConfig cfg = linkmodel::internal_default_config();
    cfg.M = elements;
    cfg.P_b = linkmodel::solve_transmit_power(dbm_to_watts(p_tot_dbm), cfg);
    return cfg;
}

struct OracleCheck {
    bool comparable = false;
    bool ok = true;
    double analytic = 0.0;
    McEstimate mc;
};

OracleCheck compare(double analytic, const McEstimate& mc) {
    OracleCheck c;
    c.analytic = analytic;
    c.mc = mc;
    if (mc.p_hat < 1e-3 || mc.p_hat > 0.9) return c;  // outside the window
    c.comparable = true;
    c.ok = std::abs(analytic - mc.p_hat) <= std::max(4.0 * mc.stderr_, 0.10 * mc.p_hat);
    return c;
}

}  // namespace

TEST_CASE("criterion 1: special-function suite") {
    using namespace mfris::numerics;
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    auto expect = [&ok](double got, double want, double rel) {
        ok = ok && std::abs(got - want) <= rel * std::abs(want);
    };

    expect(gamma_fn(1.0), 1.0, 1e-12);
    expect(gamma_fn(5.0), 24.0, 1e-12);
    expect(gamma_fn(0.5), std::sqrt(M_PI), 1e-12);
    expect(lower_incomplete_gamma(1.0, 1.0), 1.0 - std::exp(-1.0), 1e-12);
    expect(lower_incomplete_gamma(2.0, 0.0), 0.0, 0.0);
    ok = ok && lower_incomplete_gamma(2.0, 0.0) == 0.0;
    expect(lower_incomplete_gamma(0.5, 1.0), 1.4936482656248540, 1e-11);  // adaptive-quadrature oracle
    expect(kummer_1f1(-0.5, 1.0, 0.0), 1.0, 1e-14);
    expect(kummer_1f1(1.0, 1.0, 0.7), std::exp(0.7), 1e-12);
    expect(kummer_1f1(-0.5, 1.0, -3.0), 2.1268525984794104, 1e-11);  // extended-precision series oracle
    expect(gauss_2f1(1.0, 1.0, 2.0, 0.5), 2.0 * std::log(2.0), 1e-12);
    expect(gauss_2f1(0.4, 1.2, 3.3, 0.0), 1.0, 1e-14);
    expect(gauss_2f1(1.0, 0.5, 2.5, 1.0), 1.5, 1e-12);
    expect(bessel_i(0, 0.0), 1.0, 1e-14);
    ok = ok && bessel_i(1, 0.0) == 0.0;
    expect(bessel_i(0, 0.5), 1.0634833707413235, 1e-10);  // ascending-series oracle

    const auto lag1 = laguerre_rule(1);
    expect(lag1.nodes[0], 1.0, 1e-13);
    expect(lag1.weights[0], 1.0, 1e-13);
    const auto lag2 = laguerre_rule(2);
    expect(lag2.nodes[0], 2.0 - std::sqrt(2.0), 1e-13);
    expect(lag2.weights[0], (2.0 + std::sqrt(2.0)) / 4.0, 1e-13);
    for (int order : {5, 50, 300}) {
        const auto rule = laguerre_rule(order);
        double wsum = 0.0;
        double wx = 0.0;
        for (int i = 0; i < order; ++i) {
            wsum += rule.weights[i];
            wx += rule.weights[i] * rule.nodes[i];
        }
        expect(wsum, 1.0, 1e-10);
        expect(wx, 1.0, 1e-10);
    }
    const auto cheb = chebyshev_nodes(4);
    double csum = 0.0;
    for (double z : cheb.nodes) csum += cheb.chebyshev_weight() * std::sqrt(1.0 - z * z);
    ok = ok && std::abs(csum - 2.0) < 0.06;

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && secs < 10.0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "special functions and rules (%.2f s)", secs);
    verdict(1, ok, detail);
}

TEST_CASE("criterion 2: external oracle equivalence") {
    bool ok = true;
    std::string detail = "external analytic vs MC:";
    for (int m : {4, 12}) {
        for (double p_tot : {20.0, 30.0, 40.0}) {
            const SystemConfig cfg = external_config(m, p_tot);
            const ScenarioSpec ip{Scenario::external, SicMode::imperfect, Architecture::mf_ris};
            const ScenarioSpec pf{Scenario::external, SicMode::perfect, Architecture::mf_ris};
            const McConfig mc{kTrials, kSeed, kPartitions};

            const auto r_psic = compare(
                analysis::sop_ext_r_psic(cfg, rules()).value,
                montecarlo::estimate_sop(pf, cfg, mc, McTarget::reflect_user));
            const auto r_ipsic = compare(
                analysis::sop_ext_r_ipsic(cfg, rules()).value,
                montecarlo::estimate_sop(ip, cfg, mc, McTarget::reflect_user));
            const auto t = compare(analysis::sop_ext_t(cfg, rules()).value,
                                   montecarlo::estimate_sop(pf, cfg, mc, McTarget::refract_user));

            for (const auto* c : {&r_psic, &r_ipsic, &t}) {
                if (c->comparable) ok = ok && c->ok;
            }
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "\n  M=%-2d Ptot=%2.0f dBm  r_psic %.3g/%.3g%s  r_ipsic %.3g/%.3g%s  t %.3g/%.3g%s",
                          m, p_tot, r_psic.analytic, r_psic.mc.p_hat,
                          r_psic.comparable ? (r_psic.ok ? "" : " X") : " (skip)",
                          r_ipsic.analytic, r_ipsic.mc.p_hat,
                          r_ipsic.comparable ? (r_ipsic.ok ? "" : " X") : " (skip)", t.analytic,
                          t.mc.p_hat, t.comparable ? (t.ok ? "" : " X") : " (skip)");
            detail += buf;
        }
    }
    verdict(2, ok, detail);
}

TEST_CASE("criterion 3: internal oracle equivalence") {
    bool ok = true;
    std::string detail = "internal analytic vs MC:";
    for (double p_tot : {20.0, 30.0}) {
        const SystemConfig cfg = internal_config(12, p_tot);
        const ScenarioSpec ip{Scenario::internal, SicMode::imperfect, Architecture::mf_ris};
        const ScenarioSpec pf{Scenario::internal, SicMode::perfect, Architecture::mf_ris};
        const McConfig mc{kTrials, kSeed, kPartitions};

        const auto ipsic = compare(analysis::sop_int_t(cfg, rules(), SicMode::imperfect).value,
                                   montecarlo::estimate_sop(ip, cfg, mc, McTarget::refract_user));
        const auto psic = compare(analysis::sop_int_t(cfg, rules(), SicMode::perfect).value,
                                  montecarlo::estimate_sop(pf, cfg, mc, McTarget::refract_user));
        for (const auto* c : {&ipsic, &psic}) {
            if (c->comparable) ok = ok && c->ok;
        }
        char buf[128];
        std::snprintf(buf, sizeof(buf), "\n  Ptot=%2.0f dBm  ipsic %.3g/%.3g%s  psic %.3g/%.3g%s",
                      p_tot, ipsic.analytic, ipsic.mc.p_hat,
                      ipsic.comparable ? (ipsic.ok ? "" : " X") : " (skip)", psic.analytic,
                      psic.mc.p_hat, psic.comparable ? (psic.ok ? "" : " X") : " (skip)");
        detail += buf;
    }
    verdict(3, ok, detail);
}

TEST_CASE("criterion 4: secrecy diversity orders") {
    bool ok = true;
    std::string detail = "diversity orders:";
    for (int m : {2, 3, 4}) {
        SystemConfig cfg;
        cfg.M = m;
        const double d = analysis::diversity_order(AsymKind::ext_r_psic, cfg, rules());
        ok = ok && std::abs(d - m) <= 0.05;
        char buf[48];
        std::snprintf(buf, sizeof(buf), " psic(M=%d)=%.4f", m, d);
        detail += buf;
    }
    SystemConfig cfg;
    cfg.M = 3;
    const double d_ip = analysis::diversity_order(AsymKind::ext_r_ipsic, cfg, rules());
    ok = ok && std::abs(d_ip) <= 0.01;

    SystemConfig intl = linkmodel::internal_default_config();
    intl.M = 3;
    const double d_int_ip = analysis::diversity_order(AsymKind::int_t_ipsic, intl, rules());
    const double d_int_p = analysis::diversity_order(AsymKind::int_t_psic, intl, rules());
    ok = ok && std::abs(d_int_ip) <= 0.01 && std::abs(d_int_p) <= 0.01;
    char buf[96];
    std::snprintf(buf, sizeof(buf), " ipsic=%.4f int_ipsic=%.4f int_psic=%.4f", d_ip, d_int_ip,
                  d_int_p);
    detail += buf;
    verdict(4, ok, detail);
}

TEST_CASE("criterion 5: imperfect-SIC error floor") {
    SystemConfig at50 = external_config(12, 50.0);
    SystemConfig at60 = external_config(12, 60.0);
    const double a50 = analysis::sop_ext_r_ipsic(at50, rules()).value;
    const double a60 = analysis::sop_ext_r_ipsic(at60, rules()).value;
    const double rel = std::abs(a50 - a60) / a60;
    bool ok = rel < 0.01;

    const ScenarioSpec ip{Scenario::external, SicMode::imperfect, Architecture::mf_ris};
    const McConfig mc{kTrials, kSeed, kPartitions};
    const McEstimate m50 = montecarlo::estimate_sop(ip, at50, mc, McTarget::reflect_user);
    const McEstimate m60 = montecarlo::estimate_sop(ip, at60, mc, McTarget::reflect_user);
    // floor level within the stated decade, flat within noise
    ok = ok && m50.p_hat >= 1e-2 - 4.0 * m50.stderr_;
    ok = ok && m50.p_hat <= 1e-1 + 4.0 * m50.stderr_;
    ok = ok && std::abs(m60.p_hat - m50.p_hat) <=
                   std::max(4.0 * std::hypot(m50.stderr_, m60.stderr_), 0.05 * m50.p_hat);

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "analytic floor %.4g vs %.4g (rel %.3g), MC floor %.4g -> %.4g", a50, a60, rel,
                  m50.p_hat, m60.p_hat);
    verdict(5, ok, detail);
}

TEST_CASE("criterion 6: architecture ordering at 30 dBm") {
    cli::SweepSpec spec;
    spec.variable = cli::SweepVariable::p_tot_dbm;
    spec.values = {30.0};
    spec.scenario = {Scenario::external, SicMode::imperfect, Architecture::mf_ris};
    spec.outputs = {cli::SweepOutput::sop_exact, cli::SweepOutput::sop_mc};
    spec.architectures = {Architecture::mf_ris, Architecture::star_ris, Architecture::active_ris};
    spec.sic_modes = {SicMode::imperfect, SicMode::perfect};
    const McConfig mc{kTrials, kSeed, kPartitions};
    const auto rows = cli::run_sweep(spec, SystemConfig{}, mc, rules());

    bool ok = true;
    std::string detail = "system SOP by architecture:";
    for (const SicMode sic : {SicMode::imperfect, SicMode::perfect}) {
        double mf_e = 0, star_e = 0, act_e = 0, mf_m = 0, star_m = 0, act_m = 0;
        for (const auto& row : rows) {
            if (row.sic != sic) continue;
            if (row.architecture == Architecture::mf_ris) mf_e = row.sop_exact, mf_m = row.sop_mc;
            if (row.architecture == Architecture::star_ris)
                star_e = row.sop_exact, star_m = row.sop_mc;
            if (row.architecture == Architecture::active_ris)
                act_e = row.sop_exact, act_m = row.sop_mc;
        }
        ok = ok && mf_e < star_e && mf_e < act_e && mf_m < star_m && mf_m < act_m;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "\n  %s: exact mf=%.4g star=%.4g active=%.4g | mc mf=%.4g star=%.4g active=%.4g",
                      linkmodel::to_string(sic).c_str(), mf_e, star_e, act_e, mf_m, star_m, act_m);
        detail += buf;
    }
    verdict(6, ok, detail);
}

TEST_CASE("criterion 7: internal non-monotonicity in the power budget") {
    cli::SweepSpec spec;
    spec.variable = cli::SweepVariable::p_tot_dbm;
    spec.values = {10, 15, 20, 25, 30, 35, 40, 45};
    spec.scenario = {Scenario::internal, SicMode::imperfect, Architecture::mf_ris};
    spec.outputs = {cli::SweepOutput::sop_exact};
    spec.architectures = {Architecture::mf_ris};
    spec.sic_modes = {SicMode::imperfect};
    const auto rows = cli::run_sweep(spec, linkmodel::internal_default_config(), McConfig{}, rules());

    double min_v = 2.0;
    size_t min_i = 0;
    std::string detail = "ipSIC SOP over the budget:";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].sop_exact < min_v) {
            min_v = rows[i].sop_exact;
            min_i = i;
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), " %.3g", rows[i].sop_exact);
        detail += buf;
    }
    const bool ok = min_i > 0 && min_i + 1 < rows.size() && min_v < rows.front().sop_exact &&
                    min_v < rows.back().sop_exact;
    verdict(7, ok, detail);
}

TEST_CASE("criterion 8: quadrature robustness") {
    const Quadratures fine = Quadratures::make(QuadOrders{}.doubled());
    SystemConfig ext;
    SystemConfig intl = linkmodel::internal_default_config();
    auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
    const double d1 = rel(analysis::sop_ext_r_ipsic(ext, rules()).value,
                          analysis::sop_ext_r_ipsic(ext, fine).value);
    const double d2 = rel(analysis::sop_ext_t(ext, rules()).value,
                          analysis::sop_ext_t(ext, fine).value);
    const double d3 = rel(analysis::sop_int_t(intl, rules(), SicMode::imperfect).value,
                          analysis::sop_int_t(intl, fine, SicMode::imperfect).value);
    bool ok = d1 < 1e-4 && d2 < 1e-4 && d3 < 1e-4;

    const auto lag300 = numerics::laguerre_rule(300);
    for (double lw : lag300.log_weights) ok = ok && std::isfinite(lw);

    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "order-doubling shifts: %.2e %.2e %.2e; order-300 log weights finite", d1, d2,
                  d3);
    verdict(8, ok, detail);
}

TEST_CASE("criterion 9: sweep determinism") {
    cli::SweepSpec spec;
    spec.variable = cli::SweepVariable::p_tot_dbm;
    spec.values = {25.0, 30.0};
    spec.scenario = {Scenario::external, SicMode::imperfect, Architecture::mf_ris};
    spec.outputs = {cli::SweepOutput::sop_exact, cli::SweepOutput::sop_mc,
                    cli::SweepOutput::throughput_exact};
    spec.architectures = {Architecture::mf_ris, Architecture::star_ris};
    spec.sic_modes = {SicMode::imperfect};

    McConfig mc{100000, kSeed, 1};
    const std::string a =
        cli::csv_string(cli::run_sweep(spec, SystemConfig{}, mc, rules()), spec.outputs);
    const std::string b =
        cli::csv_string(cli::run_sweep(spec, SystemConfig{}, mc, rules()), spec.outputs);
    mc.partitions = 8;
    const std::string c =
        cli::csv_string(cli::run_sweep(spec, SystemConfig{}, mc, rules()), spec.outputs);
    const bool ok = a == b && a == c;
    verdict(9, ok, "byte-identical CSV across reruns and partition counts {1, 8}");
}
