#pragma once

#include "sp4/mat4.hpp"

#include <array>
#include <optional>
#include <string>

namespace sp4 {

// The eight Weyl elements, indexed by reduced word in the two simple
// reflections. "A" is the short-root reflection, "B" the long-root one.
enum class Weyl : int {
  id = 0,
  a = 1,    // s_alpha
  b = 2,    // s_beta
  ab = 3,   // s_alpha s_beta
  ba = 4,   // s_beta s_alpha
  aba = 5,  // s_alpha s_beta s_alpha
  bab = 6,  // s_beta s_alpha s_beta
  abab = 7, // long element
};

constexpr std::array<Weyl, 8> all_weyl = {
    Weyl::id, Weyl::a, Weyl::b, Weyl::ab, Weyl::ba, Weyl::aba, Weyl::bab, Weyl::abab};

int weyl_length(Weyl w);
// "1", "a", "b", "ab", ... (letters in multiplication order, leftmost first).
std::string weyl_name(Weyl w);
// Human-facing variant used by the CLI: "id", "s_alpha", "s_alpha*s_beta", ...
std::string weyl_display(Weyl w);
std::optional<Weyl> weyl_from_name(const std::string& s);

// Integral representative matrices. s_alpha swaps the two coordinate pairs
// (1<->2, 3<->4); s_beta fixes e1, e3 and maps e2 -> -e4, e4 -> e2. Products
// follow the word left to right.
Mat4z weyl_matrix(Weyl w);

// Number of free real coordinates in the unipotent integral attached to w
// (equals the word length).
int weyl_unfolded_dims(Weyl w);

// Which of the four u-coordinates (n1, n2, n4, n5) are unfolded by w, as a
// bitmask over {1, 2, 4, 5} -> bits 0..3.
unsigned weyl_direction_mask(Weyl w);

} // namespace sp4
