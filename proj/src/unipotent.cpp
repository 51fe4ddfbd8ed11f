#include "sp4/unipotent.hpp"

namespace sp4 {

namespace {

template <typename M, typename T>
M u_fill(const NCoords<T>& n) {
  M m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1;
  m(0, 1) = n.n1;
  m(0, 2) = n.n2;
  m(0, 3) = n.n1 * n.n5 + n.n4;
  m(1, 2) = n.n4;
  m(1, 3) = n.n5;
  m(3, 2) = -n.n1;
  return m;
}

} // namespace

Mat4d u_matrix(const NCoordsD& n) { return u_fill<Mat4d>(n); }
Mat4q u_matrix(const NCoordsQ& n) { return u_fill<Mat4q>(n); }

std::optional<NCoordsQ> n_coords(const Mat4q& m) {
  NCoordsQ n{m(0, 1), m(0, 2), m(1, 2), m(1, 3)};
  if (u_matrix(n) == m) return n;
  return std::nullopt;
}

namespace {

template <typename T>
NCoords<T> compose_impl(const NCoords<T>& a, const NCoords<T>& b) {
  // Read off u(a), u(b) -> u(c) entrywise. a3 denotes the (1,4) entry of a.
  T a3 = a.n1 * a.n5 + a.n4;
  NCoords<T> c;
  c.n1 = a.n1 + b.n1;
  c.n2 = a.n2 + b.n2 + a.n1 * b.n4 - a3 * b.n1;
  c.n4 = a.n4 + b.n4 - a.n5 * b.n1;
  c.n5 = a.n5 + b.n5;
  return c;
}

} // namespace

NCoordsD n_compose(const NCoordsD& a, const NCoordsD& b) { return compose_impl(a, b); }
NCoordsQ n_compose(const NCoordsQ& a, const NCoordsQ& b) { return compose_impl(a, b); }

NCoordsD n_inverse(const NCoordsD& a) {
  double a3 = a.n1 * a.n5 + a.n4;
  NCoordsD c;
  c.n1 = -a.n1;
  c.n5 = -a.n5;
  c.n4 = -a.n4 - a.n5 * a.n1;
  c.n2 = -a.n2 - a.n1 * c.n4 + a3 * c.n1;
  // c = inverse: compose(a, c) = id; the formulas invert the group law above.
  return c;
}

Mat4d palpha_u_matrix(double s11, double s12, double s22) {
  NCoordsD n{0.0, s11, s12, s22};
  return u_matrix(n);
}

Mat4d pbeta_u_matrix(double n1, double n2, double c) {
  NCoordsD n{n1, n2, c, 0.0};
  return u_matrix(n);
}

} // namespace sp4
