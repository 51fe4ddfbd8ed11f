#pragma once

#include "sp4/weyl.hpp"

#include <utility>

namespace sp4 {

// Eigenvalues of the two generating invariant differential operators on the
// power function y1^(nu1 + 2) y2^(2 nu2 - nu1 + 1). These are data (the
// operators themselves are not implemented): a quadratic and a factored
// cubic in (nu1, nu2).
std::pair<double, double> invariant_eigenvalues(double nu1, double nu2);

// Classical Whittaker-type integral
//   W(y, nu, psi_t) = \int_R (y / (y^2 + u^2))^nu e(-t u) du,
// evaluated by oscillatory quadrature (converges for nu > 1/2).
double whittaker_classical(double y, double nu, double t, double tol = 1e-10);

// Closed form of the t = 0 case: y^(1 - nu) B(1/2, nu - 1/2).
double whittaker_classical_degenerate(double y, double nu);

// Whittaker functions attached to the Weyl cells, evaluated at the torus
// point diag(y1, y2, 1/y1, 1/y2) for the character indexed by (t1, t5).
// The seven proper cells have closed forms in the classical integral above;
// the long cell has none, so this entry point throws std::invalid_argument
// for it (evaluate whittaker_integral with an explicit tolerance). Returns
// exactly 0 when the character is incompatible with the cell (id needs
// t1 = t5 = 0; a, ba, aba need t5 = 0; b, ab, bab need t1 = 0).
double whittaker(Weyl w, double y1, double y2, double nu1, double nu2,
                 double t1, double t5);

// Defining unipotent integral of the same function, evaluated numerically:
// the independent cross-check for the closed forms. gl_order controls the
// fixed tensor rule used for the inner dimensions of the 3- and 4-variable
// cells; tol drives the adaptive/oscillatory outer layers.
double whittaker_integral(Weyl w, double y1, double y2, double nu1, double nu2,
                          double t1, double t5, double tol = 1e-8,
                          int gl_order = 64);

} // namespace sp4
