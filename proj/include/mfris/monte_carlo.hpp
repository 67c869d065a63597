#pragma once

#include <cstdint>

#include "mfris/counter_rng.hpp"
#include "mfris/link_model.hpp"
#include "mfris/system_config.hpp"

namespace mfris::montecarlo {

using linkmodel::ScenarioSpec;
using linkmodel::SystemConfig;

// Trial budget and deterministic stream layout. Trial t always draws
// from stream(seed, t), so estimates are bit-identical for any
// partitioning of the trial range across workers.
struct McConfig {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    int partitions = 1;
};

struct McEstimate {
    double p_hat = 0.0;
    double stderr_ = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct TrialOutcome {
    bool outage_r = false;
    bool outage_t = false;
};

// Raw outage counts of one simulation pass.
struct McCounts {
    std::uint64_t outage_r = 0;
    std::uint64_t outage_t = 0;
    std::uint64_t outage_any = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

enum class McTarget { reflect_user, refract_user, pair_any };

// One channel-level trial: user placement, per-element fading with
// coherent phase configuration, exact thermal-noise sums, residual
// interference draws, SINRs, and the secrecy-capacity outage events.
// cfg must already be architecture-mapped.
TrialOutcome simulate_trial(const ScenarioSpec& spec, const SystemConfig& cfg, CounterRng& rng);

// Full simulation pass (applies the architecture mapping itself).
McCounts run_trials(const ScenarioSpec& spec, const SystemConfig& cfg, const McConfig& mc);

McEstimate estimate_from_counts(std::uint64_t outages, std::uint64_t trials, std::uint64_t seed);

// Empirical secrecy outage probability of the chosen target.
McEstimate estimate_sop(const ScenarioSpec& spec, const SystemConfig& cfg, const McConfig& mc,
                        McTarget target);

// Empirical delay-limited throughput (1 - p_hat) * rate with the
// propagated standard error. Target selects the user and its rate.
McEstimate estimate_throughput(const ScenarioSpec& spec, const SystemConfig& cfg,
                               const McConfig& mc, McTarget target);

}  // namespace mfris::montecarlo
