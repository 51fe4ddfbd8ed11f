#pragma once

#include "sp4/mat4.hpp"
#include "sp4/unipotent.hpp"

namespace sp4 {

// Coordinates on the symmetric space: g = u(n1, n2, n4, n5) * a(y1, y2) * k
// with a = diag(y1, y2, 1/y1, 1/y2), y1, y2 > 0, k in the standard maximal
// compact (orthogonal symplectic) subgroup.
struct IwasawaPoint {
  NCoordsD n{};
  double y1 = 1.0;
  double y2 = 1.0;

  double n3() const { return n.n1 * n.n5 + n.n4; }
};

// u * a as a matrix (k = 1).
Mat4d embed_iwasawa(const IwasawaPoint& p);

// Decompose g in Sp(4, R). The y-parts come from row norms of g and of its
// wedge rows; the n-parts by back substitution from g g^T. Throws
// std::domain_error if the residual k-factor is not orthogonal-symplectic to
// within k_tol (scaled by the matrix magnitude).
IwasawaPoint iwasawa(const Mat4d& g, double k_tol = 1e-8);

// Just (y1, y2) from the bottom two rows of g, no k verification. This is the
// hot path used by series evaluation.
void iwasawa_ys(const double* row3, const double* row4, double& y1, double& y2);

// Membership test for the maximal compact: k symplectic, k k^T = 1, and the
// 2x2 block structure [[A, B], [-B, A]] with A + iB unitary.
bool in_maximal_compact(const Mat4d& k, double tol = 1e-10);

} // namespace sp4
