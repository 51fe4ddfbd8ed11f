#include "sp4/iwasawa.hpp"

#include <cmath>

namespace sp4 {

Mat4d embed_iwasawa(const IwasawaPoint& p) {
  Mat4d a;
  a(0, 0) = p.y1;
  a(1, 1) = p.y2;
  a(2, 2) = 1.0 / p.y1;
  a(3, 3) = 1.0 / p.y2;
  return u_matrix(p.n) * a;
}

void iwasawa_ys(const double* r3, const double* r4, double& y1, double& y2) {
  double n3sq = r3[0] * r3[0] + r3[1] * r3[1] + r3[2] * r3[2] + r3[3] * r3[3];
  double wsq = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double m = r3[i] * r4[j] - r3[j] * r4[i];
      wsq += m * m;
    }
  y1 = 1.0 / std::sqrt(n3sq);
  y2 = std::sqrt(n3sq / wsq);
}

bool in_maximal_compact(const Mat4d& k, double tol) {
  // k k^T = 1
  Mat4d kt = k.transpose();
  Mat4d id = k * kt;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::fabs(id(i, j) - (i == j ? 1.0 : 0.0)) > tol) return false;
  if (symplectic_residual(k) > tol) return false;
  // Block shape [[A, B], [-B, A]].
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (std::fabs(k(i, j) - k(i + 2, j + 2)) > tol) return false;
      if (std::fabs(k(i, j + 2) + k(i + 2, j)) > tol) return false;
    }
  return true;
}

IwasawaPoint iwasawa(const Mat4d& g, double k_tol) {
  // S = g g^T determines u and a by back substitution:
  //   S33 = y1^-2, n1 = -S34/S33, y2^-2 = S44 - S34^2/S33,
  //   n4 = S23/S33, n5 = (S24 + n1 n4 S33^-1... ) -- see below,
  //   n2 = S13/S33.
  Mat4d s = g * g.transpose();
  double s33 = s(2, 2);
  if (!(s33 > 0.0)) throw std::domain_error("iwasawa: row 3 has nonpositive norm");
  IwasawaPoint p;
  double y1sq_inv = s33;
  p.n.n1 = -s(2, 3) / s33;
  double y2sq_inv = s(3, 3) - s(2, 3) * s(2, 3) / s33;
  if (!(y2sq_inv > 0.0)) throw std::domain_error("iwasawa: degenerate bottom rows");
  p.n.n4 = s(1, 2) / s33;
  p.n.n5 = (s(1, 3) + p.n.n1 * p.n.n4 * s33) / y2sq_inv;
  p.n.n2 = s(0, 2) / s33;
  p.y1 = 1.0 / std::sqrt(y1sq_inv);
  p.y2 = 1.0 / std::sqrt(y2sq_inv);

  // Residual factor must be in the maximal compact.
  Mat4d na = embed_iwasawa(p);
  // Invert u a exactly: a^-1 u^-1.
  NCoordsD ninv = n_inverse(p.n);
  Mat4d ai;
  ai(0, 0) = 1.0 / p.y1;
  ai(1, 1) = 1.0 / p.y2;
  ai(2, 2) = p.y1;
  ai(3, 3) = p.y2;
  Mat4d k = ai * (u_matrix(ninv) * g);
  double scale = 0.0;
  for (double x : na.a) scale = std::max(scale, std::fabs(x));
  if (!in_maximal_compact(k, k_tol * std::max(1.0, scale)))
    throw std::domain_error("iwasawa: residual factor not in the maximal compact");
  return p;
}

} // namespace sp4
