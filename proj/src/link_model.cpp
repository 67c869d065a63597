#include "mfris/link_model.hpp"

#include <cmath>
#include <stdexcept>

namespace mfris::linkmodel {

namespace {

double path_gain(const SystemConfig& cfg, double d_hop) {
    return cfg.chi * cfg.chi * std::pow(cfg.d_b, -cfg.alpha) * std::pow(d_hop, -cfg.alpha);
}

double thermal_power(const SystemConfig& cfg, double d_hop, double thermal_factor) {
    return cfg.chi * std::pow(d_hop, -cfg.alpha) * cfg.sigma_s2 * thermal_factor;
}

double residual(const SystemConfig& cfg, SicMode sic, double v_ip) {
    return sic == SicMode::perfect ? 0.0 : cfg.varpi * cfg.P_b * v_ip;
}

}  // namespace

LinkRealization expected_realization(const SystemConfig& cfg, double d_r, double d_t) {
    LinkRealization real;
    real.thermal_r = channels::thermal_gain(cfg.M, cfg.kappa_r);
    real.thermal_t = channels::thermal_gain(cfg.M, cfg.kappa_t);
    real.thermal_e = channels::thermal_gain(cfg.M, cfg.kappa_e);
    real.v_ip_r = cfg.omega_ip_r;
    real.v_ip_er = cfg.omega_ip_er;
    real.v_ip_t = cfg.omega_ip_t;
    real.v_ip_rt = cfg.omega_ip_rt;
    real.d_r = d_r;
    real.d_t = d_t;
    return real;
}

double total_power(const SystemConfig& cfg) {
    const double circuit = cfg.P_ps + cfg.P_dc;
    switch (cfg.architecture) {
        case Architecture::mf_ris:
            return cfg.P_b + cfg.M * cfg.P_r + 2.0 * cfg.M * circuit;
        case Architecture::star_ris:
            return cfg.P_b + 2.0 * cfg.M * circuit;
        case Architecture::active_ris:
            // cfg.M is the per-user element count; the surface carries 2M.
            return cfg.P_b + 2.0 * cfg.M * cfg.P_r + 4.0 * cfg.M * circuit;
    }
    throw std::logic_error("unknown architecture");
}

double solve_transmit_power(double p_tot, const SystemConfig& cfg) {
    SystemConfig zero = cfg;
    zero.P_b = 0.0;
    const double overhead = total_power(zero);
    const double p_b = p_tot - overhead;
    if (!(p_b > 0.0))
        throw std::invalid_argument("total power budget does not cover circuit consumption");
    return p_b;
}

double sinr_r_decodes_t(const LinkRealization& real, const SystemConfig& cfg) {
    const double beta = cfg.beta_eff_r();
    const double g = path_gain(cfg, real.d_r) * real.g_legit_r * real.g_legit_r;
    const double th = thermal_power(cfg, real.d_r, real.thermal_r);
    return cfg.P_b * cfg.a_t * beta * g /
           (cfg.P_b * cfg.a_r * beta * g + beta * th + cfg.sigma_n2);
}

double sinr_r_own(const LinkRealization& real, const SystemConfig& cfg, SicMode sic) {
    const double beta = cfg.beta_eff_r();
    const double g = path_gain(cfg, real.d_r) * real.g_legit_r * real.g_legit_r;
    const double th = thermal_power(cfg, real.d_r, real.thermal_r);
    return cfg.P_b * cfg.a_r * beta * g /
           (beta * th + residual(cfg, sic, real.v_ip_r) + cfg.sigma_n2);
}

double sinr_t_own(const LinkRealization& real, const SystemConfig& cfg) {
    const double beta = cfg.beta_eff_t();
    const double g = path_gain(cfg, real.d_t) * real.g_legit_t * real.g_legit_t;
    const double th = thermal_power(cfg, real.d_t, real.thermal_t);
    return cfg.P_b * cfg.a_t * beta * g /
           (cfg.P_b * cfg.a_r * beta * g + beta * th + cfg.sigma_n2);
}

double sinr_eve_t(const LinkRealization& real, const SystemConfig& cfg) {
    const double beta = cfg.beta_eff_r();
    const double g = path_gain(cfg, cfg.d_e) * std::norm(real.g_eve);
    const double th = thermal_power(cfg, cfg.d_e, real.thermal_e);
    return cfg.P_b * cfg.a_t * beta * g /
           (cfg.P_b * cfg.a_r * beta * g + beta * th + cfg.sigma_e2);
}

double sinr_eve_r(const LinkRealization& real, const SystemConfig& cfg, SicMode sic) {
    const double beta = cfg.beta_eff_r();
    const double g = path_gain(cfg, cfg.d_e) * std::norm(real.g_eve);
    const double th = thermal_power(cfg, cfg.d_e, real.thermal_e);
    return cfg.P_b * cfg.a_r * beta * g /
           (beta * th + residual(cfg, sic, real.v_ip_er) + cfg.sigma_e2);
}

double sinr_t_own_internal(const LinkRealization& real, const SystemConfig& cfg) {
    const double beta = cfg.beta_eff_t();
    const double g = path_gain(cfg, real.d_t) * real.g_legit_t * real.g_legit_t;
    const double th = thermal_power(cfg, real.d_t, real.thermal_t);
    return cfg.P_b * cfg.a_t * beta * g /
           (cfg.varpi * cfg.P_b * real.v_ip_t + beta * th + cfg.sigma_n2);
}

double sinr_ieve_t(const LinkRealization& real, const SystemConfig& cfg) {
    const double beta = cfg.beta_eff_r();
    const double g = path_gain(cfg, real.d_r) * real.g_legit_r * real.g_legit_r;
    const double th = thermal_power(cfg, real.d_r, real.thermal_r);
    return cfg.P_b * cfg.a_t * beta * g /
           (beta * th + cfg.varpi * cfg.P_b * real.v_ip_rt + cfg.sigma_e2);
}

double secrecy_capacity(double g_leg, double g_eve) {
    const double c = std::log2(1.0 + g_leg) - std::log2(1.0 + g_eve);
    return c > 0.0 ? c : 0.0;
}

SystemConfig map_architecture(const ScenarioSpec& spec, const SystemConfig& cfg) {
    if (cfg.architecture == spec.architecture) return cfg;
    if (cfg.architecture != Architecture::mf_ris)
        throw std::invalid_argument("architecture mapping starts from an mf_ris config");

    SystemConfig mapped = cfg;
    switch (spec.architecture) {
        case Architecture::mf_ris:
            break;
        case Architecture::star_ris:
            mapped.beta_r = 1.0;
            mapped.beta_t = 1.0;
            mapped.architecture = Architecture::star_ris;
            break;
        case Architecture::active_ris:
            if (cfg.M % 2 != 0)
                throw std::invalid_argument("active RIS mapping requires an even element count");
            mapped.M = cfg.M / 2;
            mapped.e_r = 1.0;
            mapped.e_t = 1.0;
            mapped.architecture = Architecture::active_ris;
            break;
    }
    return mapped;
}

}  // namespace mfris::linkmodel
