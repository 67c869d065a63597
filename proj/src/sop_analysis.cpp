#include "mfris/sop_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mfris/channel_statistics.hpp"
#include "mfris/special_functions.hpp"

namespace mfris::analysis {

using channels::fit_gamma;
using channels::GammaFit;
using channels::highsnr_coeff;
using channels::omega_br;
using channels::thermal_gain;
using numerics::gauss_2f1;
using numerics::log_gamma;
using numerics::reg_lower_gamma;

namespace {

constexpr double kNegligibleWeight = 1e-290;

double pow_neg_alpha(double d, double alpha) { return std::pow(d, -alpha); }

void check_rules(const Quadratures& rules) {
    if (rules.orders.W < 1 || rules.orders.S < 1 || rules.orders.D < 1 ||
        rules.orders.N < 1 || rules.orders.I < 1)
        throw std::invalid_argument("quadrature orders must be >= 1");
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

SopResult finish_exact(double value, const Quadratures& rules) {
    SopResult r;
    r.value = clamp01(value);
    r.method = SopMethod::exact_quadrature;
    r.orders_used = rules.orders;
    return r;
}

SopResult finish_asym(double value, const Quadratures& rules, bool uses_2f1_convention) {
    SopResult r;
    r.method = SopMethod::asymptotic;
    r.orders_used = rules.orders;
    if (uses_2f1_convention) r.flags.push_back("asymptotic_2F1_limit_convention");
    if (value > 1.0) r.flags.push_back("clamped");
    r.value = clamp01(value);
    return r;
}

// Main-link coefficients of the reflection user: signal (scales with the
// swept transmit power), residual multiplier, and equivalent thermal term.
struct MainCoeffs {
    double sig;
    double resid;
    double thermal;
};

MainCoeffs ext_r_main(const SystemConfig& cfg, double p_main) {
    const double dbinv = pow_neg_alpha(cfg.d_b, cfg.alpha);
    return {p_main * cfg.a_r * cfg.chi * cfg.chi * cfg.beta_eff_r() * dbinv,
            cfg.varpi * p_main,
            cfg.beta_eff_r() * cfg.chi * cfg.sigma_s2 * thermal_gain(cfg.M, cfg.kappa_r)};
}

MainCoeffs ext_t_main(const SystemConfig& cfg, double p_main) {
    const double dbinv = pow_neg_alpha(cfg.d_b, cfg.alpha);
    return {p_main * cfg.a_t * cfg.chi * cfg.chi * cfg.beta_eff_t() * dbinv,
            p_main * cfg.a_r * cfg.chi * cfg.chi * cfg.beta_eff_t() * dbinv,
            cfg.beta_eff_t() * cfg.chi * cfg.sigma_s2 * thermal_gain(cfg.M, cfg.kappa_t)};
}

// Eavesdropper-side thermal-plus-noise term, normalized by its AWGN.
double eve_noise_floor(const SystemConfig& cfg) {
    return cfg.beta_eff_r() * cfg.sigma_s2 * cfg.chi * pow_neg_alpha(cfg.d_e, cfg.alpha) *
               thermal_gain(cfg.M, cfg.kappa_e) / cfg.sigma_e2 +
           1.0;
}

// Distance node mapping of the external scenario.
double q_of(double z, double R_d) { return (z + 1.0) * R_d / 2.0; }

// Distance-power node mapping of the internal scenario.
double h_of(double x, double R_d_alpha) { return (x + 1.0) * R_d_alpha / 2.0; }

}  // namespace

Quadratures Quadratures::make(const QuadOrders& orders) {
    return {orders,
            numerics::laguerre_rule(orders.S),
            numerics::laguerre_rule(orders.D),
            numerics::chebyshev_nodes(orders.W),
            numerics::chebyshev_nodes(orders.N),
            numerics::chebyshev_nodes(orders.I)};
}

bool SopResult::has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

double asym_channel_constant(double kappa_b, double kappa_phi, double delta) {
    if (!(delta > 0.0) || delta >= 1.0)
        throw std::invalid_argument("asym_channel_constant delta must lie in (0, 1)");
    return highsnr_coeff({kappa_b}, {kappa_phi}) * gauss_2f1(2.0, 0.5, 2.5, 1.0 - delta);
}

double ext_r_threshold(const SystemConfig& cfg, double y, SicMode sic) {
    const double rho = cfg.rho_e();
    const double sig = rho * cfg.a_r * cfg.chi * cfg.chi * cfg.beta_eff_r() *
                       pow_neg_alpha(cfg.d_e, cfg.alpha) * pow_neg_alpha(cfg.d_b, cfg.alpha);
    const double resid = sic == SicMode::perfect ? 0.0 : cfg.varpi * rho * cfg.omega_ip_er;
    return std::exp2(cfg.R_r) * (1.0 + sig * y / (resid + eve_noise_floor(cfg))) - 1.0;
}

double ext_r_threshold_asym(const SystemConfig& cfg, double y) {
    if (!(cfg.varpi > 0.0))
        throw std::invalid_argument("imperfect-SIC asymptote requires varpi > 0");
    const double sig = cfg.a_r * cfg.chi * cfg.chi * cfg.beta_eff_r() *
                       pow_neg_alpha(cfg.d_e, cfg.alpha) * pow_neg_alpha(cfg.d_b, cfg.alpha);
    return std::exp2(cfg.R_r) * (1.0 + sig * y / (cfg.varpi * cfg.omega_ip_er)) - 1.0;
}

double ext_t_threshold(const SystemConfig& cfg, double y) {
    const double rho = cfg.rho_e();
    const double gain = cfg.chi * cfg.chi * cfg.beta_eff_r() *
                        pow_neg_alpha(cfg.d_e, cfg.alpha) * pow_neg_alpha(cfg.d_b, cfg.alpha);
    const double sig = rho * cfg.a_t * gain;
    const double intra = rho * cfg.a_r * gain;
    return std::exp2(cfg.R_t) * (1.0 + sig * y / (intra * y + eve_noise_floor(cfg))) - 1.0;
}

double int_t_threshold(const SystemConfig& cfg, double z, SicMode sic) {
    const double dbinv = pow_neg_alpha(cfg.d_b, cfg.alpha);
    const double sig = cfg.P_b * cfg.a_t * cfg.chi * cfg.chi * cfg.beta_eff_r() * dbinv;
    const double resid = sic == SicMode::perfect ? 0.0 : cfg.varpi * cfg.P_b * cfg.omega_ip_rt;
    const double thermal = cfg.beta_eff_r() * cfg.chi * cfg.sigma_s2 * thermal_gain(cfg.M, cfg.kappa_r);
    const double omega = omega_br(cfg.M, cfg.kappa_b, cfg.kappa_r);
    return std::exp2(cfg.R_t) * (1.0 + sig * omega / ((resid + cfg.sigma_e2) * z + thermal)) - 1.0;
}

double int_t_threshold_asym(const SystemConfig& cfg, double z) {
    if (!(cfg.varpi > 0.0))
        throw std::invalid_argument("imperfect-SIC asymptote requires varpi > 0");
    const double dbinv = pow_neg_alpha(cfg.d_b, cfg.alpha);
    const double sig = cfg.a_t * cfg.chi * cfg.chi * cfg.beta_eff_r() * dbinv;
    const double omega = omega_br(cfg.M, cfg.kappa_b, cfg.kappa_r);
    return std::exp2(cfg.R_t) * (1.0 + sig * omega / (cfg.varpi * cfg.omega_ip_rt * z)) - 1.0;
}

namespace {

// Shared evaluator for the reflection user's exact SOP. The imperfect-SIC
// form integrates the exponential residual channel with a Laguerre rule;
// perfect SIC collapses that sum.
SopResult eval_ext_r(const SystemConfig& cfg, const Quadratures& rules, SicMode sic, double p_main) {
    cfg.validate(Scenario::external);
    check_rules(rules);

    const GammaFit fit = fit_gamma(cfg.M, cfg.kappa_b, cfg.kappa_r);
    const MainCoeffs mc = ext_r_main(cfg, p_main);

    const auto& lag_d = rules.lag_d;
    const auto& cheb = rules.cheb_w;
    std::vector<double> lambda(lag_d.nodes.size());
    for (size_t d = 0; d < lag_d.nodes.size(); ++d)
        lambda[d] = ext_r_threshold(cfg, cfg.M * lag_d.nodes[d], sic);

    const double cheb_pref = M_PI / (cheb.order * cfg.R_d);

    double total = 0.0;
    auto inner = [&](double resid_term, double weight_s) {
        for (int w = 0; w < cheb.order; ++w) {
            const double z = cheb.nodes[w];
            const double q = q_of(z, cfg.R_d);
            const double dist_w = cheb_pref * q * std::sqrt(1.0 - z * z);
            const double noise = (resid_term + cfg.sigma_n2) * std::pow(q, cfg.alpha) + mc.thermal;
            for (size_t d = 0; d < lambda.size(); ++d) {
                const double gw = lag_d.weights[d];
                if (gw < kNegligibleWeight) continue;
                const double arg = std::sqrt(noise * lambda[d] / mc.sig) / fit.l;
                total += weight_s * dist_w * gw * reg_lower_gamma(fit.k, arg);
            }
        }
    };

    if (sic == SicMode::perfect || cfg.varpi == 0.0) {
        inner(0.0, 1.0);
    } else {
        const auto& lag_s = rules.lag_s;
        for (size_t s = 0; s < lag_s.nodes.size(); ++s) {
            const double gs = lag_s.weights[s];
            if (gs < kNegligibleWeight) continue;
            inner(mc.resid * cfg.omega_ip_r * lag_s.nodes[s], gs);
        }
    }
    return finish_exact(total, rules);
}

SopResult eval_ext_t(const SystemConfig& cfg, const Quadratures& rules, double p_main) {
    cfg.validate(Scenario::external);
    check_rules(rules);

    const GammaFit fit = fit_gamma(cfg.M, cfg.kappa_b, cfg.kappa_t);
    const MainCoeffs mc = ext_t_main(cfg, p_main);

    const auto& lag_d = rules.lag_d;
    const auto& cheb = rules.cheb_w;
    const double cheb_pref = M_PI / (cheb.order * cfg.R_d);

    double total = 0.0;
    for (size_t d = 0; d < lag_d.nodes.size(); ++d) {
        const double gw = lag_d.weights[d];
        if (gw < kNegligibleWeight) continue;
        const double lambda = ext_t_threshold(cfg, cfg.M * lag_d.nodes[d]);
        const double denom = mc.sig - mc.resid * lambda;
        for (int w = 0; w < cheb.order; ++w) {
            const double z = cheb.nodes[w];
            const double q = q_of(z, cfg.R_d);
            const double dist_w = cheb_pref * q * std::sqrt(1.0 - z * z);
            double p_node;
            if (denom <= 0.0) {
                // Interference dominates the allocation: conditional outage
                // is certain at this node.
                p_node = 1.0;
            } else {
                const double noise = mc.thermal + cfg.sigma_n2 * std::pow(q, cfg.alpha);
                p_node = reg_lower_gamma(fit.k, std::sqrt(noise * lambda / denom) / fit.l);
            }
            total += gw * dist_w * p_node;
        }
    }
    return finish_exact(total, rules);
}

SopResult eval_ext_r_ipsic_asym(const SystemConfig& cfg, const Quadratures& rules, double p_main) {
    (void)p_main;  // the imperfect-SIC limit has no main-power dependence
    cfg.validate(Scenario::external);
    check_rules(rules);

    const GammaFit fit = fit_gamma(cfg.M, cfg.kappa_b, cfg.kappa_r);
    const double mu_hat = cfg.a_r * cfg.chi * cfg.chi * cfg.beta_eff_r() *
                          pow_neg_alpha(cfg.d_b, cfg.alpha);

    const auto& lag_s = rules.lag_s;
    const auto& lag_d = rules.lag_d;
    const auto& cheb = rules.cheb_w;
    std::vector<double> lambda(lag_d.nodes.size());
    for (size_t d = 0; d < lag_d.nodes.size(); ++d)
        lambda[d] = ext_r_threshold_asym(cfg, cfg.M * lag_d.nodes[d]);

    const double cheb_pref = M_PI / (cheb.order * cfg.R_d);
    double total = 0.0;
    for (size_t s = 0; s < lag_s.nodes.size(); ++s) {
        const double gs = lag_s.weights[s];
        if (gs < kNegligibleWeight) continue;
        const double resid = cfg.varpi * cfg.omega_ip_r * lag_s.nodes[s];
        for (int w = 0; w < cheb.order; ++w) {
            const double z = cheb.nodes[w];
            const double q = q_of(z, cfg.R_d);
            const double dist_w = cheb_pref * q * std::sqrt(1.0 - z * z);
            const double scale = resid * std::pow(q, cfg.alpha) / mu_hat;
            for (size_t d = 0; d < lambda.size(); ++d) {
                const double gw = lag_d.weights[d];
                if (gw < kNegligibleWeight) continue;
                const double arg = std::sqrt(scale * lambda[d]) / fit.l;
                total += gs * dist_w * gw * reg_lower_gamma(fit.k, arg);
            }
        }
    }
    return finish_asym(total, rules, false);
}

SopResult eval_ext_r_psic_asym(const SystemConfig& cfg, const Quadratures& rules, double p_main) {
    cfg.validate(Scenario::external);
    check_rules(rules);

    const MainCoeffs mc = ext_r_main(cfg, p_main);
    const double log_k = std::log(asym_channel_constant(cfg.kappa_b.kappa, cfg.kappa_r.kappa));
    const double log_fact = log_gamma(2.0 * cfg.M + 1.0);

    const auto& lag_d = rules.lag_d;
    const auto& cheb = rules.cheb_w;
    const double cheb_pref = M_PI / (cheb.order * cfg.R_d);

    double total = 0.0;
    for (size_t d = 0; d < lag_d.nodes.size(); ++d) {
        const double gw = lag_d.weights[d];
        if (gw < kNegligibleWeight) continue;
        const double lambda = ext_r_threshold(cfg, cfg.M * lag_d.nodes[d], SicMode::perfect);
        for (int w = 0; w < cheb.order; ++w) {
            const double z = cheb.nodes[w];
            const double q = q_of(z, cfg.R_d);
            const double dist_w = cheb_pref * q * std::sqrt(1.0 - z * z);
            const double u = (mc.thermal + cfg.sigma_n2 * std::pow(q, cfg.alpha)) * lambda / mc.sig;
            if (u <= 0.0) continue;
            total += gw * dist_w * std::exp(cfg.M * (log_k + std::log(u)) - log_fact);
        }
    }
    return finish_asym(total, rules, true);
}

SopResult eval_ext_t_asym(const SystemConfig& cfg, const Quadratures& rules, double p_main) {
    cfg.validate(Scenario::external);
    check_rules(rules);

    const MainCoeffs mc = ext_t_main(cfg, p_main);
    const double log_k = std::log(asym_channel_constant(cfg.kappa_b.kappa, cfg.kappa_t.kappa));
    const double log_fact = log_gamma(2.0 * cfg.M + 1.0);

    const auto& lag_d = rules.lag_d;
    const auto& cheb = rules.cheb_w;
    const double cheb_pref = M_PI / (cheb.order * cfg.R_d);

    bool regime_outage = false;
    double total = 0.0;
    for (size_t d = 0; d < lag_d.nodes.size(); ++d) {
        const double gw = lag_d.weights[d];
        if (gw < kNegligibleWeight) continue;
        const double lambda = ext_t_threshold(cfg, cfg.M * lag_d.nodes[d]);
        const bool regime_ok = cfg.a_t > lambda * cfg.a_r;
        for (int w = 0; w < cheb.order; ++w) {
            const double z = cheb.nodes[w];
            const double q = q_of(z, cfg.R_d);
            const double dist_w = cheb_pref * q * std::sqrt(1.0 - z * z);
            if (!regime_ok) {
                regime_outage = true;
                total += gw * dist_w;
                continue;
            }
            const double u = (mc.thermal + cfg.sigma_n2 * std::pow(q, cfg.alpha)) * lambda /
                             (mc.sig - mc.resid * lambda);
            if (u <= 0.0) continue;
            total += gw * dist_w * std::exp(cfg.M * (log_k + std::log(u)) - log_fact);
        }
    }
    SopResult r = finish_asym(total, rules, true);
    if (regime_outage) r.flags.push_back("asymptotic_regime_outage");
    return r;
}

SopResult eval_int_t(const SystemConfig& cfg, const Quadratures& rules, SicMode sic) {
    cfg.validate(Scenario::internal);
    check_rules(rules);

    const GammaFit fit = fit_gamma(cfg.M, cfg.kappa_b, cfg.kappa_t);
    const double dbinv = pow_neg_alpha(cfg.d_b, cfg.alpha);
    const double varpi = sic == SicMode::perfect ? 0.0 : cfg.varpi;
    const double sig = cfg.P_b * cfg.a_t * cfg.chi * cfg.chi * cfg.beta_eff_t() * dbinv;
    const double resid = varpi * cfg.P_b * cfg.omega_ip_t;
    const double thermal = cfg.beta_eff_t() * cfg.chi * cfg.sigma_s2 * thermal_gain(cfg.M, cfg.kappa_t);

    SystemConfig eve_cfg = cfg;
    eve_cfg.varpi = varpi;

    const double rd_alpha = std::pow(cfg.R_d, cfg.alpha);
    const auto& cheb_n = rules.cheb_n;
    const auto& cheb_i = rules.cheb_i;
    const double pref = M_PI * M_PI * std::pow(cfg.R_d, 2.0 * cfg.alpha - 4.0) /
                        (cheb_i.order * cheb_n.order * cfg.alpha * cfg.alpha);
    const double shape_exp = 2.0 / cfg.alpha - 1.0;

    double total = 0.0;
    for (int i = 0; i < cheb_i.order; ++i) {
        const double zi = cheb_i.nodes[i];
        const double hi = h_of(zi, rd_alpha);
        const double psi = int_t_threshold(eve_cfg, hi, sic);
        const double wi = std::pow(hi, shape_exp) * std::sqrt(1.0 - zi * zi);
        for (int n = 0; n < cheb_n.order; ++n) {
            const double yn = cheb_n.nodes[n];
            const double hn = h_of(yn, rd_alpha);
            const double wn = std::pow(hn, shape_exp) * std::sqrt(1.0 - yn * yn);
            const double arg = std::sqrt(psi * ((resid + cfg.sigma_n2) * hn + thermal) / sig) / fit.l;
            total += pref * wi * wn * reg_lower_gamma(fit.k, arg);
        }
    }
    return finish_exact(total, rules);
}

SopResult eval_int_t_ipsic_asym(const SystemConfig& cfg, const Quadratures& rules) {
    cfg.validate(Scenario::internal);
    check_rules(rules);
    if (!(cfg.varpi > 0.0))
        throw std::invalid_argument("imperfect-SIC asymptote requires varpi > 0");

    const GammaFit fit = fit_gamma(cfg.M, cfg.kappa_b, cfg.kappa_t);
    const double dbinv = pow_neg_alpha(cfg.d_b, cfg.alpha);
    const double mu_hat = cfg.a_t * cfg.chi * cfg.chi * cfg.beta_eff_t() * dbinv;
    const double resid_hat = cfg.varpi * cfg.omega_ip_t;

    const double rd_alpha = std::pow(cfg.R_d, cfg.alpha);
    const auto& cheb_n = rules.cheb_n;
    const auto& cheb_i = rules.cheb_i;
    const double pref = M_PI * M_PI * std::pow(cfg.R_d, 2.0 * cfg.alpha - 4.0) /
                        (cheb_i.order * cheb_n.order * cfg.alpha * cfg.alpha);
    const double shape_exp = 2.0 / cfg.alpha - 1.0;

    double total = 0.0;
    for (int i = 0; i < cheb_i.order; ++i) {
        const double zi = cheb_i.nodes[i];
        const double hi = h_of(zi, rd_alpha);
        const double upsilon = int_t_threshold_asym(cfg, hi);
        const double wi = std::pow(hi, shape_exp) * std::sqrt(1.0 - zi * zi);
        for (int n = 0; n < cheb_n.order; ++n) {
            const double yn = cheb_n.nodes[n];
            const double hn = h_of(yn, rd_alpha);
            const double wn = std::pow(hn, shape_exp) * std::sqrt(1.0 - yn * yn);
            const double arg = std::sqrt(upsilon * resid_hat * hn / mu_hat) / fit.l;
            total += pref * wi * wn * reg_lower_gamma(fit.k, arg);
        }
    }
    return finish_asym(total, rules, false);
}

SopResult eval_int_t_psic_asym(const SystemConfig& cfg, const Quadratures& rules) {
    cfg.validate(Scenario::internal);
    check_rules(rules);

    const double dbinv = pow_neg_alpha(cfg.d_b, cfg.alpha);
    const double mu_hat = cfg.a_t * cfg.chi * cfg.chi * cfg.beta_eff_t() * dbinv;
    const double eps_hat = cfg.a_t * cfg.chi * cfg.chi * cfg.beta_eff_r() * dbinv;
    const double thermal_t = cfg.beta_eff_t() * cfg.chi * cfg.sigma_s2 * thermal_gain(cfg.M, cfg.kappa_t);
    const double thermal_r = cfg.beta_eff_r() * cfg.chi * cfg.sigma_s2 * thermal_gain(cfg.M, cfg.kappa_r);
    const double omega = omega_br(cfg.M, cfg.kappa_b, cfg.kappa_r);
    const double log_k = std::log(asym_channel_constant(cfg.kappa_b.kappa, cfg.kappa_t.kappa));
    const double log_fact = log_gamma(2.0 * cfg.M + 1.0);

    const double rd_alpha = std::pow(cfg.R_d, cfg.alpha);
    const auto& cheb_n = rules.cheb_n;
    const auto& cheb_i = rules.cheb_i;
    const double pref = M_PI * M_PI * std::pow(cfg.R_d, 2.0 * cfg.alpha - 4.0) /
                        (cheb_i.order * cheb_n.order * cfg.alpha * cfg.alpha);
    const double shape_exp = 2.0 / cfg.alpha - 1.0;

    double total = 0.0;
    for (int i = 0; i < cheb_i.order; ++i) {
        const double zi = cheb_i.nodes[i];
        const double hi = h_of(zi, rd_alpha);
        const double wi = std::pow(hi, shape_exp) * std::sqrt(1.0 - zi * zi);
        // High-SNR wiretap factor: the +-1 terms of the threshold vanish
        // relative to the power-scaled part.
        const double psi_over_p = std::exp2(cfg.R_t) * eps_hat * omega / (cfg.sigma_e2 * hi + thermal_r);
        for (int n = 0; n < cheb_n.order; ++n) {
            const double yn = cheb_n.nodes[n];
            const double hn = h_of(yn, rd_alpha);
            const double wn = std::pow(hn, shape_exp) * std::sqrt(1.0 - yn * yn);
            const double delta = psi_over_p * (cfg.sigma_n2 * hn + thermal_t) / mu_hat;
            if (delta <= 0.0) continue;
            total += pref * wi * wn * std::exp(cfg.M * (log_k + std::log(delta)) - log_fact);
        }
    }
    return finish_asym(total, rules, true);
}

double eval_asym_at(AsymKind kind, const SystemConfig& cfg, const Quadratures& rules, double p_main) {
    switch (kind) {
        case AsymKind::ext_r_ipsic: return eval_ext_r_ipsic_asym(cfg, rules, p_main).value;
        case AsymKind::ext_r_psic: return eval_ext_r_psic_asym(cfg, rules, p_main).value;
        case AsymKind::ext_t: return eval_ext_t_asym(cfg, rules, p_main).value;
        case AsymKind::int_t_ipsic: return eval_int_t_ipsic_asym(cfg, rules).value;
        case AsymKind::int_t_psic: return eval_int_t_psic_asym(cfg, rules).value;
    }
    throw std::logic_error("unknown asymptotic kind");
}

}  // namespace

SopResult sop_ext_r_ipsic(const SystemConfig& cfg, const Quadratures& rules) {
    return eval_ext_r(cfg, rules, SicMode::imperfect, cfg.P_b);
}

SopResult sop_ext_r_psic(const SystemConfig& cfg, const Quadratures& rules) {
    return eval_ext_r(cfg, rules, SicMode::perfect, cfg.P_b);
}

SopResult sop_ext_t(const SystemConfig& cfg, const Quadratures& rules) {
    return eval_ext_t(cfg, rules, cfg.P_b);
}

SopResult sop_int_t(const SystemConfig& cfg, const Quadratures& rules, SicMode sic) {
    return eval_int_t(cfg, rules, sic);
}

SopResult sop_ext_r_ipsic_asym(const SystemConfig& cfg, const Quadratures& rules) {
    return eval_ext_r_ipsic_asym(cfg, rules, cfg.P_b);
}

SopResult sop_ext_r_psic_asym(const SystemConfig& cfg, const Quadratures& rules) {
    return eval_ext_r_psic_asym(cfg, rules, cfg.P_b);
}

SopResult sop_ext_t_asym(const SystemConfig& cfg, const Quadratures& rules) {
    return eval_ext_t_asym(cfg, rules, cfg.P_b);
}

SopResult sop_int_t_ipsic_asym(const SystemConfig& cfg, const Quadratures& rules) {
    return eval_int_t_ipsic_asym(cfg, rules);
}

SopResult sop_int_t_psic_asym(const SystemConfig& cfg, const Quadratures& rules) {
    return eval_int_t_psic_asym(cfg, rules);
}

double diversity_order(AsymKind kind, const SystemConfig& cfg, const Quadratures& rules,
                       double p_lo_watts, double p_hi_watts) {
    if (!(p_hi_watts > p_lo_watts) || !(p_lo_watts > 0.0))
        throw std::invalid_argument("diversity_order requires 0 < p_lo < p_hi");
    const double lo = eval_asym_at(kind, cfg, rules, p_lo_watts);
    const double hi = eval_asym_at(kind, cfg, rules, p_hi_watts);
    if (lo < 1e-300 || hi < 1e-300)
        throw std::runtime_error(
            "asymptotic SOP underflow; evaluate with fewer elements or lower powers");
    return -(std::log(hi) - std::log(lo)) / (std::log(p_hi_watts) - std::log(p_lo_watts));
}

double secrecy_throughput(double sop, double rate) {
    if (sop < 0.0 || sop > 1.0) throw std::domain_error("sop must lie in [0, 1]");
    if (rate < 0.0) throw std::domain_error("rate must be >= 0");
    return (1.0 - sop) * rate;
}

}  // namespace mfris::analysis
