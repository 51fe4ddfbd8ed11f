#include "sp4/pluecker.hpp"

#include <ostream>

namespace sp4 {

bool PlueckerVec::incidence_ok() const {
  // Contractions of v against w: each primary coordinate pairs with the
  // minors not containing its index.
  const Int &a1 = v[0], &a2 = v[1], &a3 = v[2], &a4 = v[3];
  if (a1 * v23() - a2 * v13() + a3 * v12() != 0) return false;
  if (a1 * v24() - a2 * v14() + a4 * v12() != 0) return false;
  if (a1 * v34() - a3 * v14() + a4 * v13() != 0) return false;
  if (a2 * v34() - a3 * v24() + a4 * v23() != 0) return false;
  return true;
}

bool PlueckerVec::quadric_ok() const {
  return v12() * v34() - v13() * v24() + v14() * v23() == 0;
}

Int PlueckerVec::gcd_primary() const {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  return g;
}

Int PlueckerVec::gcd_secondary() const {
  Int g = 0;
  for (const Int& x : w) g = gcd_int(g, x);
  return g;
}

PlueckerVec pluecker_rows(const std::array<Int, 4>& r3, const std::array<Int, 4>& r4) {
  PlueckerVec p;
  p.v = r3;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) p.w[k++] = r3[i] * r4[j] - r3[j] * r4[i];
  return p;
}

PlueckerVec pluecker(const Mat4z& g) {
  std::array<Int, 4> r3{g(2, 0), g(2, 1), g(2, 2), g(2, 3)};
  std::array<Int, 4> r4{g(3, 0), g(3, 1), g(3, 2), g(3, 3)};
  return pluecker_rows(r3, r4);
}

std::ostream& operator<<(std::ostream& os, const PlueckerVec& p) {
  os << "[" << p.v1() << "," << p.v2() << "," << p.v3() << "," << p.v4() << " | "
     << p.v12() << "," << p.v13() << "," << p.v14() << "," << p.v23() << ","
     << p.v24() << "," << p.v34() << "]";
  return os;
}

namespace {

constexpr int pair_i[6] = {0, 0, 0, 1, 1, 2};
constexpr int pair_j[6] = {1, 2, 3, 2, 3, 3};

template <typename MOut, typename MIn>
MOut ext_impl(const MIn& g) {
  MOut e;
  for (int r = 0; r < 6; ++r) {
    int i = pair_i[r], j = pair_j[r];
    for (int c = 0; c < 6; ++c) {
      int k = pair_i[c], l = pair_j[c];
      e(r, c) = g(i, k) * g(j, l) - g(i, l) * g(j, k);
    }
  }
  return e;
}

} // namespace

Mat6d exterior_square(const Mat4d& g) { return ext_impl<Mat6d>(g); }
Mat6z exterior_square(const Mat4z& g) { return ext_impl<Mat6z>(g); }

Mat6d Mat6d::operator*(const Mat6d& o) const {
  Mat6d r;
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      double x = (*this)(i, k);
      if (x == 0.0) continue;
      for (int j = 0; j < 6; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Mat6z Mat6z::operator*(const Mat6z& o) const {
  Mat6z r;
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < 6; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

} // namespace sp4
