#pragma once

#include "sp4/pluecker.hpp"
#include "sp4/weyl.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace sp4 {

// One enumerated coset representative of the minimal-parabolic double coset
// decomposition, tagged by its Weyl cell. "witness" carries the auxiliary
// divisor data used by the parameterization of that cell (empty for cells
// that need none); it is emitted so consumers can re-verify membership
// without re-deriving the arithmetic.
struct CosetRep {
  Weyl cell = Weyl::id;
  PlueckerVec p;
  std::vector<std::pair<const char*, Int>> witness;
};

// Governing modulus of a representative: the quantity the enumeration is
// truncated on (1 for the identity cell, v4 for cell a, v23 for cell b, v2
// for ab, v14 for ba, v1 for aba, v12 for bab, max(v1, v12) for the long
// cell).
Int coset_modulus(const CosetRep& r);

// Enumerate all representatives of the given cell with governing modulus
// <= bound, in deterministic lexicographic order (ascending modulus layers).
// The callback returns false to stop early.
void enumerate_r(Weyl cell, std::int64_t bound,
                 const std::function<bool(const CosetRep&)>& sink);

std::vector<CosetRep> enumerate_r(Weyl cell, std::int64_t bound);

// Classify an integral coordinate point by its zero pattern into the Weyl
// cell its coset belongs to.
Weyl bruhat_cell(const PlueckerVec& p);

// Count of representatives for the long cell with fixed (v1, v12); used as a
// cross check against the generalized Ramanujan sum at trivial characters.
std::int64_t count_long_cell(std::int64_t v1, std::int64_t v12);

} // namespace sp4
