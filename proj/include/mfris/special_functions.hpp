#pragma once

namespace mfris::numerics {

// Gamma function for x > 0. Throws std::domain_error for x <= 0 and
// std::overflow_error past the representable range (x > ~171.6).
double gamma_fn(double x);

// log Gamma(x), x > 0.
double log_gamma(double x);

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Series for x < a + 1, continued fraction otherwise.
double reg_lower_gamma(double a, double x);

// Lower incomplete gamma gamma(a, x) = int_0^x p^{a-1} e^{-p} dp.
double lower_incomplete_gamma(double a, double x);

// Digamma psi(x) for x > 0.
double digamma(double x);

// Kummer confluent hypergeometric 1F1(a; b; z). b must not be a
// nonpositive integer. Negative z is routed through the Kummer
// transform 1F1(a;b;z) = e^z 1F1(b-a;b;-z) so the series stays
// cancellation-free.
double kummer_1f1(double a, double b, double z);

// Gauss hypergeometric 2F1(a, b; c; z) for z <= 1.
// z = 1 requires c - a - b > 0 (Gauss summation). The c = a + b case on
// (0, 1) uses the logarithmic connection series, so evaluation points
// z = 1 - delta with tiny delta are cheap and stable.
double gauss_2f1(double a, double b, double c, double z);

// Modified Bessel function of the first kind, order 0 or 1, x >= 0.
double bessel_i(int order, double x);

}  // namespace mfris::numerics
