#pragma once

#include <string>

#include "mfris/channel_statistics.hpp"

namespace mfris::linkmodel {

enum class Scenario { external, internal };
enum class SicMode { perfect, imperfect };
enum class Architecture { mf_ris, star_ris, active_ris };

std::string to_string(Scenario s);
std::string to_string(SicMode s);
std::string to_string(Architecture a);

// Which wiretapping scenario, SIC assumption, and surface architecture a
// run evaluates.
struct ScenarioSpec {
    Scenario scenario = Scenario::external;
    SicMode sic = SicMode::imperfect;
    Architecture architecture = Architecture::mf_ris;
};

// Full physical parameter set of the network. Powers are linear watts;
// dB/dBm conversion happens at the config-file boundary. Defaults are
// the reference external-scenario operating point.
struct SystemConfig {
    double alpha = 2.2;     // path-loss exponent
    double chi = 1e-3;      // frequency-dependent factor, -30 dB
    double d_b = 200.0;     // BS -> surface distance, m
    double d_e = 15.0;      // surface -> eavesdropper distance, m
    double R_d = 20.0;      // user disk radius, m

    channels::RicianSpec kappa_b{3.0};
    channels::RicianSpec kappa_r{3.0};
    channels::RicianSpec kappa_t{3.0};
    channels::RicianSpec kappa_e{0.0};  // unregistered eavesdropper: Rayleigh

    double a_r = 0.25;      // power allocation, reflection user
    double a_t = 0.75;
    double e_r = 0.8;       // energy split, reflection side
    double e_t = 0.2;
    double beta_r = 10.0;   // amplification, 10 dB
    double beta_t = 10.0;

    int M = 12;             // element count (per served user for active RIS)

    double sigma_n2 = 1e-12;  // user AWGN, -90 dBm
    double sigma_e2 = 1e-12;  // eavesdropper AWGN, -90 dBm
    double sigma_s2 = 1e-11;  // surface thermal noise, -80 dBm

    double varpi = 1.0;     // residual interference level in [0, 1]

    // Residual-interference channel powers (linear).
    double omega_ip_r = 2.437811e-13;   // -126.13 dB
    double omega_ip_er = 9.418896e-14;  // -130.26 dB
    double omega_ip_t = 3.133286e-13;   // -125.04 dB
    double omega_ip_rt = 1.210598e-13;  // -129.17 dB

    double R_r = 0.1;       // target secrecy rates, BPCU
    double R_t = 0.05;

    double P_b = 1.0;       // BS transmit power, 30 dBm
    double P_r = 1e-4;      // per-element amplifier power, -10 dBm
    double P_ps = 1e-4;     // phase shifter power, -10 dBm
    double P_dc = 3.162278e-4;  // DC biasing power, -5 dBm

    Architecture architecture = Architecture::mf_ris;

    // Effective per-side power amplification: energy split times amplifier.
    double beta_eff_r() const { return e_r * beta_r; }
    double beta_eff_t() const { return e_t * beta_t; }

    // Eavesdropper receive SNR per unit channel gain.
    double rho_e() const { return P_b / sigma_e2; }

    // Throws std::invalid_argument naming the violated constraint.
    void validate(Scenario scenario) const;
};

// Defaults for the internal wiretapping scenario: decode the refraction
// user last and split energy toward it.
SystemConfig internal_default_config();

// dB / dBm conversions.
double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

}  // namespace mfris::linkmodel
