#pragma once

#include "sp4/cosets.hpp"
#include "sp4/mat4.hpp"
#include "sp4/weyl.hpp"

namespace sp4 {

// Exact decomposition gamma = b1 * w * d * b2 with b1, b2 unipotent upper
// (in the u(.) shape), d diagonal symplectic (entries may be negative; the
// sign bookkeeping lives in d), and w the Weyl matrix of the cell of gamma's
// coordinate point.
struct BruhatFactors {
  Mat4q b1;
  Weyl w = Weyl::id;
  Mat4q d;
  Mat4q b2;
};

BruhatFactors bruhat_factor(const Mat4q& gamma);
BruhatFactors bruhat_factor(const Mat4z& gamma);

} // namespace sp4
