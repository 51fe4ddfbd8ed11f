#include "sp4/bruhat.hpp"

#include "sp4/unipotent.hpp"

#include <cassert>

namespace sp4 {

namespace {

// Rational bottom-row coordinates: v = row 3, w = 2x2 minors of rows (3,4).
struct CoordsQ {
  Rat v1, v2, v3, v4;
  Rat v12, v13, v14, v23, v24, v34;
};

CoordsQ coords_of(const Mat4q& g) {
  CoordsQ c;
  c.v1 = g(2, 0);
  c.v2 = g(2, 1);
  c.v3 = g(2, 2);
  c.v4 = g(2, 3);
  auto minor = [&](int i, int j) { return g(2, i) * g(3, j) - g(2, j) * g(3, i); };
  c.v12 = minor(0, 1);
  c.v13 = minor(0, 2);
  c.v14 = minor(0, 3);
  c.v23 = minor(1, 2);
  c.v24 = minor(1, 3);
  c.v34 = minor(2, 3);
  return c;
}

Weyl cell_of(const CoordsQ& c) {
  if (c.v1 != 0) return c.v12 != 0 ? Weyl::abab : Weyl::aba;
  if (c.v2 != 0) return c.v12 != 0 ? Weyl::bab : Weyl::ab;
  if (c.v4 != 0) return c.v14 != 0 ? Weyl::ba : Weyl::a;
  return c.v23 != 0 ? Weyl::b : Weyl::id;
}

// Explicit element of the same Bruhat cell with the same bottom-row
// coordinates as the input, written as w * R with R upper triangular after
// the diagonal is pulled out.
Mat4q cell_right_factor(Weyl w, const CoordsQ& c) {
  const Rat &v1 = c.v1, &v2 = c.v2, &v3 = c.v3, &v4 = c.v4;
  const Rat &v12 = c.v12, &v13 = c.v13, &v14 = c.v14, &v23 = c.v23, &v24 = c.v24,
            &v34 = c.v34;
  Mat4q r;
  switch (w) {
    case Weyl::id:
      r(0, 0) = 1 / v3;
      r(1, 1) = v3 / v34;
      r(2, 2) = v3;
      r(3, 3) = v34 / v3;
      break;
    case Weyl::a:
      r(0, 0) = -v4 / v34; r(0, 1) = v3 / v34;
      r(1, 1) = 1 / v4;
      r(2, 2) = -v34 / v4;
      r(3, 2) = v3; r(3, 3) = v4;
      break;
    case Weyl::b:
      r(0, 0) = 1 / v3;
      r(1, 1) = v23 / v3; r(1, 3) = -v34 / v3;
      r(2, 2) = v3;
      r(3, 3) = v3 / v23;
      break;
    case Weyl::ab:
      r(0, 0) = v2 / v23; r(0, 3) = v3 / v23;
      r(1, 1) = -v2; r(1, 2) = -v3; r(1, 3) = -v4;
      r(2, 2) = v23 / v2;
      r(3, 3) = -1 / v2;
      break;
    case Weyl::ba:
      r(0, 0) = v14 / v4; r(0, 1) = v24 / v4; r(0, 2) = v34 / v4;
      r(1, 1) = 1 / v4;
      r(2, 2) = v4 / v14;
      r(3, 2) = v3; r(3, 3) = v4;
      break;
    case Weyl::aba:
      r(0, 0) = -v1; r(0, 1) = -v2; r(0, 2) = -v3; r(0, 3) = -v4;
      r(1, 1) = v1 / v14; r(1, 2) = v4 / v14;
      r(2, 2) = -1 / v1;
      r(3, 2) = v13 / v1; r(3, 3) = v14 / v1;
      break;
    case Weyl::bab:
      r(0, 0) = v12 / v2; r(0, 2) = -v23 / v2; r(0, 3) = -v24 / v2;
      r(1, 1) = -v2; r(1, 2) = -v3; r(1, 3) = -v4;
      r(2, 2) = v2 / v12;
      r(3, 3) = -1 / v2;
      break;
    case Weyl::abab:
      r(0, 0) = -v1; r(0, 1) = -v2; r(0, 2) = -v3; r(0, 3) = -v4;
      r(1, 1) = -v12 / v1; r(1, 2) = -v13 / v1; r(1, 3) = -v14 / v1;
      r(2, 2) = -1 / v1;
      r(3, 2) = v2 / v12; r(3, 3) = -v1 / v12;
      break;
  }
  return r;
}

} // namespace

BruhatFactors bruhat_factor(const Mat4q& gamma) {
  if (!is_symplectic(gamma)) throw std::domain_error("bruhat_factor: input not symplectic");
  CoordsQ c = coords_of(gamma);
  Weyl w = cell_of(c);

  Mat4q r = cell_right_factor(w, c);
  Mat4q d;
  for (int i = 0; i < 4; ++i) d(i, i) = r(i, i);
  assert(d(0, 0) * d(2, 2) == 1 && d(1, 1) * d(3, 3) == 1);
  Mat4q b2 = d.inverse() * r;
  Mat4q m = weyl_matrix(w).to_rational() * r;
  Mat4q b1 = gamma * m.inverse();

  // Both unipotent factors must have the exact u(.) shape; if not, the cell
  // matrices or the classification are wrong.
  if (!n_coords(b1) || !n_coords(b2))
    throw std::logic_error("bruhat_factor: factors not unipotent");
  BruhatFactors f;
  f.b1 = b1;
  f.w = w;
  f.d = d;
  f.b2 = b2;
  return f;
}

BruhatFactors bruhat_factor(const Mat4z& gamma) { return bruhat_factor(gamma.to_rational()); }

} // namespace sp4
