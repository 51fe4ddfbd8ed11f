#pragma once

#include <cstdint>

namespace sp4 {

// Real-argument special functions used by the closed-form tables. All of
// them are plain doubles: every formula in the library is evaluated at real
// spectral parameters.

// Riemann zeta for real s != 1 (Euler-Maclaurin; accurate to ~1e-13 on the
// range used here, roughly -30 < s < 60).
double zeta(double s);

// Gamma function for real x (Lanczos approximation plus reflection).
// Poles at nonpositive integers throw std::domain_error.
double gamma_fn(double x);

// log|Gamma(x)|, valid away from the poles.
double log_gamma_abs(double x);

// Completed zeta: pi^(-s/2) * Gamma(s/2) * zeta(s). Symmetric under
// s -> 1 - s.
double lambda(double s);

// Ratio lambda(a) / lambda(b), the shape every coefficient table uses.
double lambda_ratio(double a, double b);

// Euler beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
double beta_fn(double x, double y);

// B(1/2, x), the half-beta factor of the degenerate closed forms.
double beta_half(double x);

// Sum of d^s over positive divisors d of n (n >= 1).
double divisor_sigma(double s, std::int64_t n);

} // namespace sp4
