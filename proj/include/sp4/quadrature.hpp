#pragma once

#include <functional>
#include <vector>

namespace sp4 {

using RealFn = std::function<double(double)>;

// Adaptive Gauss-Kronrod (7/15) integration on a finite interval.
double integrate(const RealFn& f, double a, double b, double tol = 1e-10,
                 int max_depth = 24);

// Integral over [0, inf) via the tangent substitution.
double integrate_0_inf(const RealFn& f, double tol = 1e-10);

// Integral over [0, inf) of a function that oscillates at frequency |freq|
// (period 1 / |freq|) under an eventually monotone-decaying envelope:
// half-period panels are summed until the tail is below tolerance.
// freq == 0 falls back to the plain decaying-integral scheme.
double integrate_oscillatory(const RealFn& g, double freq, double tol = 1e-10);

// Integral over [0, inf) of f(u) * cos(2 pi t u) for an eventually
// monotone-decaying amplitude f. t may be zero (plain decaying integral)
// or negative (cosine is even in t).
double integrate_cosine(const RealFn& f, double t, double tol = 1e-10);

// Integral over [0, inf) of f(u) * sin(2 pi t u). Returns 0 when t == 0
// (the integrand vanishes identically) and is odd in t.
double integrate_sine(const RealFn& f, double t, double tol = 1e-10);

// Fixed-order Gauss-Legendre nodes and weights on [0, 1].
struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;
};
const GaussLegendre& gauss_legendre(int n);

} // namespace sp4
