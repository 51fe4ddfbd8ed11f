#pragma once

#include "sp4/common.hpp"

#include <vector>

namespace sp4 {

// Small exact integer matrices for lattice work (dimensions <= 6 here).
using ZMat = std::vector<std::vector<Int>>;

ZMat zmat_identity(int n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
ZMat zmat_transpose(const ZMat& a);
Int zmat_det(ZMat a); // Bareiss, square input

// Smith normal form: returns (U, S, V) with U * A * V = S, U and V
// unimodular, S diagonal with s1 | s2 | ...
struct SmithResult {
  ZMat u, s, v;
};
SmithResult smith_normal_form(const ZMat& a);

// Basis of the saturated lattice {x in Z^n : A x = 0} (column kernel),
// returned as rows.
ZMat integer_kernel(const ZMat& a);

// Unimodular matrix whose first row is the given primitive vector.
// Requires gcd of entries = 1.
ZMat extend_to_unimodular(const std::vector<Int>& c);

// Solve X * A = B over the integers (A: k x n, B: m x n, X: m x k);
// throws std::domain_error if no integral solution exists.
ZMat solve_left(const ZMat& a, const ZMat& b);

} // namespace sp4
