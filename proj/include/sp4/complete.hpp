#pragma once

#include "sp4/mat4.hpp"
#include "sp4/pluecker.hpp"

#include <array>

namespace sp4 {

// Build an integral symplectic matrix whose bottom two rows realize the given
// coordinate point. Requires all invariants (incidence, trace, quadric) and
// both gcds equal to 1. The representative is deterministic.
Mat4z complete_to_gamma(const PlueckerVec& p);

// Rational variant: any nonzero valid coordinate point (gcds arbitrary,
// primary row nonzero) is realized by a rational symplectic matrix.
Mat4q complete_to_sp4q(const PlueckerVec& p);

// Given integral rows r3, r4 with r3 J r4^T = 0 and 2x2 minor gcd 1, extend
// upward to an integral symplectic matrix with those bottom rows.
Mat4z complete_rows(const std::array<Int, 4>& r3, const std::array<Int, 4>& r4);

// Integral symplectic matrix whose bottom row is the given primitive vector
// (completion for the Heisenberg maximal parabolic coset space).
Mat4z complete_beta(const std::array<Int, 4>& v);

// Integral symplectic matrix whose bottom two rows span the plane with the
// given wedge coordinates (order 12, 13, 14, 23, 24, 34). Requires the
// quadric and trace relations, gcd of the six = 1 (completion for the Siegel
// maximal parabolic coset space).
Mat4z complete_alpha(const std::array<Int, 6>& w);

} // namespace sp4
