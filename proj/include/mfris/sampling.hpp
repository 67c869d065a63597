#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "mfris/channel_statistics.hpp"

namespace mfris::channels {

// One Rician fading draw with unit mean power and an explicit
// line-of-sight phase:
//   h = sqrt(kappa/(kappa+1)) e^{j phase} + sqrt(1/(kappa+1)) (g1 + j g2)/sqrt(2).
// Links sharing a physical path pass the same phase for every element.
template <typename Rng>
std::complex<double> sample_rician_los(RicianSpec k, Rng& rng, double los_phase) {
    if (!(k.kappa >= 0.0)) throw std::domain_error("Rician kappa must be >= 0");
    const double los = std::sqrt(k.kappa / (k.kappa + 1.0));
    const double scatter = std::sqrt(1.0 / (k.kappa + 1.0));
    auto [g1, g2] = rng.normal_pair();
    return std::polar(los, los_phase) +
           scatter * std::complex<double>(g1, g2) / std::sqrt(2.0);
}

// Rician draw with its own uniformly random LoS phase.
template <typename Rng>
std::complex<double> sample_rician(RicianSpec k, Rng& rng) {
    const double phase = 2.0 * M_PI * rng.uniform01();
    return sample_rician_los(k, rng, phase);
}

// User distance on a disk of radius R_d with density 2x / R_d^2
// (inverse-CDF draw R_d sqrt(u)).
template <typename Rng>
double sample_user_distance(double radius, Rng& rng) {
    if (!(radius > 0.0)) throw std::domain_error("sample_user_distance requires R_d > 0");
    return radius * std::sqrt(rng.uniform01());
}

}  // namespace mfris::channels
