#pragma once

namespace mfris::channels {

// Rician K-factor (linear). kappa = 0 degenerates to Rayleigh fading.
struct RicianSpec {
    double kappa = 0.0;
};

// Gamma-distribution fit of the coherently combined cascade amplitude
// sum_m |h_phi,m h_b,m|: shape k = M E^2 / D, scale l = D / E, where E
// and D are the single-hop product mean and variance.
struct GammaFit {
    double k;
    double l;
};

// Exponential model of the eavesdropper cascade power |H_be|^2:
// CDF 1 - e^{-upsilon x} with upsilon = 1 / (M xi_be^2), the rate the
// uniform-phase-difference construction actually produces.
struct EveCascadeSpec {
    double xi_be;    // cascade amplitude gain chi * sqrt(d_b^-a d_e^-a beta)
    double upsilon;  // exponential rate

    static EveCascadeSpec make(int elements, double xi_be);
};

// Mean of |h1 h2| for two independent unit-power Rician hops; in (0, 1].
double cascade_mean(RicianSpec kb, RicianSpec kp);

// Variance of |h1 h2|; equals 1 - mean^2 because each hop has unit
// second moment.
double cascade_var(RicianSpec kb, RicianSpec kp);

// Gamma fit of the M-element coherent cascade.
GammaFit fit_gamma(int elements, RicianSpec kb, RicianSpec kp);

// CDF of the squared cascade amplitude: P(k, sqrt(x) / l).
double legit_cdf(double x, const GammaFit& fit);

// Density of the squared cascade amplitude,
// x^{k/2-1} e^{-sqrt(x)/l} / (2 l^k Gamma(k)).
double legit_pdf(double x, const GammaFit& fit);

// Exponential CDF of the eavesdropper cascade power.
double eve_cdf(double x, const EveCascadeSpec& spec);

// Equivalent power gain of the surface's own thermal noise after
// coherent combination: M (M kappa + 1) / (kappa + 1).
double thermal_gain(int elements, RicianSpec k);

// Mean of the squared coherent cascade, M D + (M E)^2, computed from the
// Bessel-function form of the single-hop moments.
double omega_br(int elements, RicianSpec kb, RicianSpec kr);

// Bessel-form single-hop moments (same values as cascade_mean /
// cascade_var by identity; exposed for cross-checks).
double cascade_mean_bessel(RicianSpec kb, RicianSpec kp);
double cascade_var_bessel(RicianSpec kb, RicianSpec kp);

// High-SNR channel constant 16 (1+kappa_b)(1+kappa_phi) / (3 e^{kappa_b+kappa_phi}).
double highsnr_coeff(RicianSpec kb, RicianSpec kp);

}  // namespace mfris::channels
