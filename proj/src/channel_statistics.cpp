#include "mfris/channel_statistics.hpp"

#include <cmath>
#include <stdexcept>

#include "mfris/special_functions.hpp"

namespace mfris::channels {

using numerics::bessel_i;
using numerics::kummer_1f1;
using numerics::log_gamma;
using numerics::reg_lower_gamma;

namespace {

void check_kappa(RicianSpec k) {
    if (!(k.kappa >= 0.0)) throw std::domain_error("Rician kappa must be >= 0");
}

// 1F1(-1/2; 1; -kappa): the Rician amplitude-mean factor.
double mean_factor(double kappa) { return kummer_1f1(-0.5, 1.0, -kappa); }

// Bessel form of the same factor: e^{-k/2} ((k+1) I0(k/2) + k I1(k/2)).
double mean_factor_bessel(double kappa) {
    return std::exp(-0.5 * kappa) *
           ((kappa + 1.0) * bessel_i(0, 0.5 * kappa) + kappa * bessel_i(1, 0.5 * kappa));
}

}  // namespace

EveCascadeSpec EveCascadeSpec::make(int elements, double xi_be) {
    if (elements < 1) throw std::domain_error("EveCascadeSpec needs elements >= 1");
    if (!(xi_be > 0.0)) throw std::domain_error("EveCascadeSpec needs xi_be > 0");
    // Uniform phase differences leave E[cos^2] = E[sin^2] = 1/2 per
    // component, so the cascade power is exponential with mean M xi^2.
    return {xi_be, 1.0 / (elements * xi_be * xi_be)};
}

double cascade_mean(RicianSpec kb, RicianSpec kp) {
    check_kappa(kb);
    check_kappa(kp);
    return M_PI / 4.0 * mean_factor(kb.kappa) * mean_factor(kp.kappa) /
           std::sqrt((kb.kappa + 1.0) * (kp.kappa + 1.0));
}

double cascade_var(RicianSpec kb, RicianSpec kp) {
    check_kappa(kb);
    check_kappa(kp);
    const double fb = mean_factor(kb.kappa);
    const double fp = mean_factor(kp.kappa);
    return 1.0 - fb * fb * M_PI * M_PI * fp * fp / (16.0 * (kb.kappa + 1.0) * (kp.kappa + 1.0));
}

double cascade_mean_bessel(RicianSpec kb, RicianSpec kp) {
    check_kappa(kb);
    check_kappa(kp);
    return M_PI / 4.0 * mean_factor_bessel(kb.kappa) * mean_factor_bessel(kp.kappa) /
           std::sqrt((kb.kappa + 1.0) * (kp.kappa + 1.0));
}

double cascade_var_bessel(RicianSpec kb, RicianSpec kp) {
    const double m = cascade_mean_bessel(kb, kp);
    return 1.0 - m * m;
}

GammaFit fit_gamma(int elements, RicianSpec kb, RicianSpec kp) {
    if (elements < 1) throw std::domain_error("fit_gamma needs elements >= 1");
    const double mean = cascade_mean(kb, kp);
    const double var = cascade_var(kb, kp);
    return {elements * mean * mean / var, var / mean};
}

double legit_cdf(double x, const GammaFit& fit) {
    if (x < 0.0) throw std::domain_error("legit_cdf requires x >= 0");
    if (x == 0.0) return 0.0;
    return reg_lower_gamma(fit.k, std::sqrt(x) / fit.l);
}

double legit_pdf(double x, const GammaFit& fit) {
    if (x < 0.0 || (x == 0.0 && fit.k < 2.0))
        throw std::domain_error("legit_pdf requires x > 0 (density diverges at 0 for k < 2)");
    if (x == 0.0) return 0.0;
    const double log_pdf = (0.5 * fit.k - 1.0) * std::log(x) - std::sqrt(x) / fit.l -
                           fit.k * std::log(fit.l) - log_gamma(fit.k) - std::log(2.0);
    return std::exp(log_pdf);
}

double eve_cdf(double x, const EveCascadeSpec& spec) {
    if (x < 0.0) throw std::domain_error("eve_cdf requires x >= 0");
    return -std::expm1(-spec.upsilon * x);
}

double thermal_gain(int elements, RicianSpec k) {
    if (elements < 1) throw std::domain_error("thermal_gain needs elements >= 1");
    check_kappa(k);
    return elements * (elements * k.kappa + 1.0) / (k.kappa + 1.0);
}

double omega_br(int elements, RicianSpec kb, RicianSpec kr) {
    if (elements < 1) throw std::domain_error("omega_br needs elements >= 1");
    const double mean = cascade_mean_bessel(kb, kr);
    const double var = cascade_var_bessel(kb, kr);
    return elements * var + elements * mean * elements * mean;
}

double highsnr_coeff(RicianSpec kb, RicianSpec kp) {
    check_kappa(kb);
    check_kappa(kp);
    return 16.0 * (1.0 + kb.kappa) * (1.0 + kp.kappa) * std::exp(-(kb.kappa + kp.kappa)) / 3.0;
}

}  // namespace mfris::channels
