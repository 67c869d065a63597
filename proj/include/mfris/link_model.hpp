#pragma once

#include <complex>

#include "mfris/system_config.hpp"

namespace mfris::linkmodel {

// One realization of every random quantity a SINR evaluation needs.
// Cascade sums are pre-gain (no chi, distance, or amplification factors);
// thermal entries are the dimensionless |sum_m conj(h_m) e^{j theta_m}|^2
// factors whose mean is channels::thermal_gain.
struct LinkRealization {
    double g_legit_r = 0.0;              // sum_m |h_r,m h_b,m|
    double g_legit_t = 0.0;              // sum_m |h_t,m h_b,m|
    std::complex<double> g_eve{0.0, 0.0};  // phase-bearing eavesdropper sum
    double thermal_r = 0.0;
    double thermal_t = 0.0;
    double thermal_e = 0.0;
    double v_ip_r = 0.0;   // residual-interference draws, watts-normalized
    double v_ip_er = 0.0;
    double v_ip_t = 0.0;
    double v_ip_rt = 0.0;
    double d_r = 0.0;      // user distances, m
    double d_t = 0.0;
};

// Deterministic realization built from the expected thermal factors and
// residual means; used by arithmetic cross-checks.
LinkRealization expected_realization(const SystemConfig& cfg, double d_r, double d_t);

// Total network power consumption under the config's architecture.
double total_power(const SystemConfig& cfg);

// BS transmit power implied by a total budget; throws when the circuit
// terms already exhaust it.
double solve_transmit_power(double p_tot, const SystemConfig& cfg);

// SINR for the reflection user decoding the refraction user's signal.
double sinr_r_decodes_t(const LinkRealization& real, const SystemConfig& cfg);

// SINR for the reflection user decoding its own signal after SIC.
double sinr_r_own(const LinkRealization& real, const SystemConfig& cfg, SicMode sic);

// SINR for the refraction user decoding its own signal directly.
double sinr_t_own(const LinkRealization& real, const SystemConfig& cfg);

// External eavesdropper intercepting each user's signal.
double sinr_eve_t(const LinkRealization& real, const SystemConfig& cfg);
double sinr_eve_r(const LinkRealization& real, const SystemConfig& cfg, SicMode sic);

// Internal scenario: refraction user decodes last; the reflection user
// wiretaps it through its own coherently served cascade.
double sinr_t_own_internal(const LinkRealization& real, const SystemConfig& cfg);
double sinr_ieve_t(const LinkRealization& real, const SystemConfig& cfg);

// [log2(1 + g_leg) - log2(1 + g_eve)]^+ in bits per channel use.
double secrecy_capacity(double g_leg, double g_eve);

// Benchmark architecture mapping. Identity for mf_ris; star_ris drops
// amplification (beta = 1, splits kept); active_ris halves M into
// per-user dedicated sets at full element power. Idempotent: a config
// already mapped to the requested architecture passes through.
SystemConfig map_architecture(const ScenarioSpec& spec, const SystemConfig& cfg);

}  // namespace mfris::linkmodel
