#include "mfris/system_config.hpp"

#include <cmath>
#include <stdexcept>

namespace mfris::linkmodel {

std::string to_string(Scenario s) {
    return s == Scenario::external ? "external" : "internal";
}

std::string to_string(SicMode s) {
    return s == SicMode::perfect ? "perfect" : "imperfect";
}

std::string to_string(Architecture a) {
    switch (a) {
        case Architecture::mf_ris: return "mf_ris";
        case Architecture::star_ris: return "star_ris";
        case Architecture::active_ris: return "active_ris";
    }
    return "?";
}

void SystemConfig::validate(Scenario scenario) const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };

    if (!(alpha > 0.0)) fail("alpha must be positive");
    if (!(chi > 0.0)) fail("chi must be positive");
    if (!(d_b > 0.0)) fail("d_b must be positive");
    if (!(d_e > 0.0)) fail("d_e must be positive");
    if (!(R_d > 0.0)) fail("R_d must be positive");
    if (kappa_b.kappa < 0.0 || kappa_r.kappa < 0.0 || kappa_t.kappa < 0.0 || kappa_e.kappa < 0.0)
        fail("Rician factors must be >= 0");
    if (!(a_r > 0.0) || !(a_t > 0.0)) fail("power allocation factors must be positive");
    if (std::abs(a_r + a_t - 1.0) > 1e-9) fail("a_r + a_t must equal 1");
    if (architecture == Architecture::active_ris) {
        if (std::abs(e_r - 1.0) > 1e-9 || std::abs(e_t - 1.0) > 1e-9)
            fail("active RIS uses dedicated elements: e_r and e_t must both be 1");
    } else {
        if (!(e_r > 0.0) || !(e_t > 0.0)) fail("energy-splitting factors must be positive");
        if (std::abs(e_r + e_t - 1.0) > 1e-9) fail("e_r + e_t must equal 1");
    }
    if (!(beta_r > 0.0) || !(beta_t > 0.0)) fail("amplification factors must be positive");
    if (M < 1) fail("M must be >= 1");
    if (!(sigma_n2 > 0.0) || !(sigma_e2 > 0.0) || !(sigma_s2 > 0.0))
        fail("noise powers must be positive");
    if (varpi < 0.0 || varpi > 1.0) fail("varpi must lie in [0, 1]");
    if (omega_ip_r < 0.0 || omega_ip_er < 0.0 || omega_ip_t < 0.0 || omega_ip_rt < 0.0)
        fail("residual-interference powers must be >= 0");
    if (!(R_r > 0.0) || !(R_t > 0.0)) fail("target secrecy rates must be positive");
    if (!(P_b > 0.0)) fail("P_b must be positive");
    if (P_r < 0.0 || P_ps < 0.0 || P_dc < 0.0) fail("circuit powers must be >= 0");

    if (scenario == Scenario::external) {
        if (!(a_t > a_r)) fail("external scenario requires a_t > a_r");
        if (architecture != Architecture::active_ris && !(e_r >= e_t))
            fail("external scenario requires e_r >= e_t");
    } else {
        if (!(a_r > a_t)) fail("internal scenario requires a_r > a_t");
        if (architecture != Architecture::active_ris && !(e_t >= e_r))
            fail("internal scenario requires e_t >= e_r");
    }
}

SystemConfig internal_default_config() {
    SystemConfig cfg;
    cfg.a_r = 0.9;
    cfg.a_t = 0.1;
    cfg.e_r = 0.2;
    cfg.e_t = 0.8;
    return cfg;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

}  // namespace mfris::linkmodel
