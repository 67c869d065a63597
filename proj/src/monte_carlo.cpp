#include "mfris/monte_carlo.hpp"

#include <cmath>
#include <complex>
#include <future>
#include <stdexcept>
#include <vector>

#include "mfris/sampling.hpp"

namespace mfris::montecarlo {

using channels::sample_rician_los;
using channels::sample_user_distance;
using linkmodel::LinkRealization;
using linkmodel::Scenario;
using linkmodel::secrecy_capacity;
using linkmodel::SicMode;

namespace {

double phase(CounterRng& rng) { return 2.0 * M_PI * rng.uniform01(); }

}  // namespace

TrialOutcome simulate_trial(const ScenarioSpec& spec, const SystemConfig& cfg, CounterRng& rng) {
    LinkRealization real;
    real.d_r = sample_user_distance(cfg.R_d, rng);
    real.d_t = sample_user_distance(cfg.R_d, rng);

    // One LoS phase per link, shared by all elements of that link.
    const double psi_b = phase(rng);
    const double psi_r = phase(rng);
    const double psi_t = phase(rng);
    const double psi_e = spec.scenario == Scenario::external ? phase(rng) : 0.0;

    std::complex<double> cascade_eve{0.0, 0.0};
    std::complex<double> thermal_r{0.0, 0.0};
    std::complex<double> thermal_t{0.0, 0.0};
    std::complex<double> thermal_e{0.0, 0.0};
    double cascade_r = 0.0;
    double cascade_t = 0.0;

    for (int m = 0; m < cfg.M; ++m) {
        const auto h_b = sample_rician_los(cfg.kappa_b, rng, psi_b);
        const auto h_r = sample_rician_los(cfg.kappa_r, rng, psi_r);
        const auto h_t = sample_rician_los(cfg.kappa_t, rng, psi_t);
        const double phi_b = std::arg(h_b);
        // Phase shifts aligned per served user: theta_phi = arg h_phi - arg h_b.
        const double theta_r = std::arg(h_r) - phi_b;
        const double theta_t = std::arg(h_t) - phi_b;

        cascade_r += std::abs(h_r) * std::abs(h_b);
        cascade_t += std::abs(h_t) * std::abs(h_b);
        thermal_r += std::conj(h_r) * std::polar(1.0, theta_r);
        thermal_t += std::conj(h_t) * std::polar(1.0, theta_t);

        if (spec.scenario == Scenario::external) {
            const auto h_e = sample_rician_los(cfg.kappa_e, rng, psi_e);
            const auto shift_r = std::polar(1.0, theta_r);
            cascade_eve += std::conj(h_e) * shift_r * h_b;
            thermal_e += std::conj(h_e) * shift_r;
        }
    }

    real.g_legit_r = cascade_r;
    real.g_legit_t = cascade_t;
    real.g_eve = cascade_eve;
    real.thermal_r = std::norm(thermal_r);
    real.thermal_t = std::norm(thermal_t);
    real.thermal_e = std::norm(thermal_e);

    TrialOutcome out;
    if (spec.scenario == Scenario::external) {
        real.v_ip_r = rng.exponential(cfg.omega_ip_r);
        real.v_ip_er = rng.exponential(cfg.omega_ip_er);
        const double leg_r = linkmodel::sinr_r_own(real, cfg, spec.sic);
        const double eve_r = linkmodel::sinr_eve_r(real, cfg, spec.sic);
        const double leg_t = linkmodel::sinr_t_own(real, cfg);
        const double eve_t = linkmodel::sinr_eve_t(real, cfg);
        out.outage_r = secrecy_capacity(leg_r, eve_r) < cfg.R_r;
        out.outage_t = secrecy_capacity(leg_t, eve_t) < cfg.R_t;
    } else {
        real.v_ip_t = rng.exponential(cfg.omega_ip_t);
        real.v_ip_rt = rng.exponential(cfg.omega_ip_rt);
        SystemConfig eff = cfg;
        if (spec.sic == SicMode::perfect) eff.varpi = 0.0;
        const double leg_t = linkmodel::sinr_t_own_internal(real, eff);
        const double eve_t = linkmodel::sinr_ieve_t(real, eff);
        out.outage_t = secrecy_capacity(leg_t, eve_t) < cfg.R_t;
        out.outage_r = false;
    }
    return out;
}

McCounts run_trials(const ScenarioSpec& spec, const SystemConfig& cfg, const McConfig& mc) {
    if (mc.trials < 1) throw std::invalid_argument("trial count must be positive");
    if (mc.partitions < 1) throw std::invalid_argument("partitions must be >= 1");

    const SystemConfig mapped = linkmodel::map_architecture(spec, cfg);
    mapped.validate(spec.scenario);

    struct PartCounts {
        std::uint64_t r = 0, t = 0, any = 0;
    };
    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        PartCounts c;
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            CounterRng rng(mc.seed, trial);
            const TrialOutcome o = simulate_trial(spec, mapped, rng);
            c.r += o.outage_r;
            c.t += o.outage_t;
            c.any += (o.outage_r || o.outage_t);
        }
        return c;
    };

    const std::uint64_t per = mc.trials / mc.partitions;
    std::vector<std::future<PartCounts>> parts;
    parts.reserve(mc.partitions);
    for (int p = 0; p < mc.partitions; ++p) {
        const std::uint64_t begin = p * per;
        const std::uint64_t end = (p == mc.partitions - 1) ? mc.trials : begin + per;
        parts.push_back(std::async(std::launch::async, run_range, begin, end));
    }

    McCounts counts;
    counts.trials = mc.trials;
    counts.seed = mc.seed;
    for (auto& f : parts) {
        const PartCounts c = f.get();
        counts.outage_r += c.r;
        counts.outage_t += c.t;
        counts.outage_any += c.any;
    }
    return counts;
}

McEstimate estimate_from_counts(std::uint64_t outages, std::uint64_t trials, std::uint64_t seed) {
    McEstimate est;
    est.trials = trials;
    est.seed = seed;
    est.p_hat = static_cast<double>(outages) / static_cast<double>(trials);
    est.stderr_ = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
    return est;
}

namespace {

std::uint64_t pick_count(const McCounts& counts, McTarget target) {
    switch (target) {
        case McTarget::reflect_user: return counts.outage_r;
        case McTarget::refract_user: return counts.outage_t;
        case McTarget::pair_any: return counts.outage_any;
    }
    throw std::logic_error("unknown target");
}

}  // namespace

McEstimate estimate_sop(const ScenarioSpec& spec, const SystemConfig& cfg, const McConfig& mc,
                        McTarget target) {
    if (mc.trials < 10000)
        throw std::invalid_argument("reported estimates need at least 1e4 trials");
    if (spec.scenario == Scenario::internal && target == McTarget::reflect_user)
        throw std::invalid_argument("internal scenario has no reflect-user outage event");
    const McCounts counts = run_trials(spec, cfg, mc);
    return estimate_from_counts(pick_count(counts, target), counts.trials, counts.seed);
}

McEstimate estimate_throughput(const ScenarioSpec& spec, const SystemConfig& cfg,
                               const McConfig& mc, McTarget target) {
    if (target == McTarget::pair_any)
        throw std::invalid_argument("throughput is per-user; pick a user target");
    const double rate = target == McTarget::reflect_user ? cfg.R_r : cfg.R_t;
    McEstimate est = estimate_sop(spec, cfg, mc, target);
    est.p_hat = (1.0 - est.p_hat) * rate;
    est.stderr_ *= rate;
    return est;
}

}  // namespace mfris::montecarlo
