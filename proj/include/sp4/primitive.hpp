#pragma once

#include "sp4/pluecker.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace sp4 {

// Integral points of the full coordinate variety with sup-norm <= bound and
// both gcds 1, lexicographic order. These parameterize the bottom-two-row
// data of minimal-parabolic cosets without the cell decomposition.
void enumerate_v0(std::int64_t bound, const std::function<bool(const PlueckerVec&)>& sink);
std::vector<PlueckerVec> enumerate_v0(std::int64_t bound);

// Primitive integral points of the wedge variety (order 12, 13, 14, 23, 24,
// 34; trace and quadric relations hold, gcd of the six = 1), sup-norm bound.
void enumerate_va(std::int64_t bound,
                  const std::function<bool(const std::array<Int, 6>&)>& sink);
std::vector<std::array<Int, 6>> enumerate_va(std::int64_t bound);

// Primitive integral 4-vectors, sup-norm bound.
void enumerate_vb(std::int64_t bound,
                  const std::function<bool(const std::array<Int, 4>&)>& sink);
std::vector<std::array<Int, 4>> enumerate_vb(std::int64_t bound);

} // namespace sp4
