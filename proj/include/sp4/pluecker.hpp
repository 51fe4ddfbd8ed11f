#pragma once

#include "sp4/mat4.hpp"

#include <array>
#include <iosfwd>

namespace sp4 {

// Coordinates of the bottom two rows of a symplectic matrix: the primary
// vector v = (v1..v4) is row 3, the secondary w_{ij} = v3i*v4j - v3j*v4i are
// the 2x2 minors of rows (3,4) in column order (12, 13, 14, 23, 24, 34).
struct PlueckerVec {
  std::array<Int, 4> v{};  // v1..v4
  std::array<Int, 6> w{};  // v12, v13, v14, v23, v24, v34

  const Int& v1() const { return v[0]; }
  const Int& v2() const { return v[1]; }
  const Int& v3() const { return v[2]; }
  const Int& v4() const { return v[3]; }
  const Int& v12() const { return w[0]; }
  const Int& v13() const { return w[1]; }
  const Int& v14() const { return w[2]; }
  const Int& v23() const { return w[3]; }
  const Int& v24() const { return w[4]; }
  const Int& v34() const { return w[5]; }

  bool operator==(const PlueckerVec& o) const = default;

  // The four bilinear incidence relations tying v to w, plus the symplectic
  // trace condition v13 + v24 = 0 and the Grassmann-Pluecker quadric.
  bool incidence_ok() const;
  bool symplectic_ok() const { return v13() + v24() == 0; }
  bool quadric_ok() const;
  bool all_ok() const { return incidence_ok() && symplectic_ok() && quadric_ok(); }

  Int gcd_primary() const;
  Int gcd_secondary() const;
  bool is_integral_point() const { return gcd_primary() == 1 && gcd_secondary() == 1; }
};

// Extract from the bottom two rows of g.
PlueckerVec pluecker(const Mat4z& g);
PlueckerVec pluecker_rows(const std::array<Int, 4>& r3, const std::array<Int, 4>& r4);

std::ostream& operator<<(std::ostream& os, const PlueckerVec& p);

// 6x6 exterior square acting on wedge coordinates ordered
// (12, 13, 14, 23, 24, 34): (r wedge s) * ext(g) = (r g) wedge (s g).
struct Mat6d {
  std::array<double, 36> a{};
  double& operator()(int i, int j) { return a[6 * i + j]; }
  double operator()(int i, int j) const { return a[6 * i + j]; }
  Mat6d operator*(const Mat6d& o) const;
};

struct Mat6z {
  std::array<Int, 36> a{};
  Int& operator()(int i, int j) { return a[6 * i + j]; }
  const Int& operator()(int i, int j) const { return a[6 * i + j]; }
  bool operator==(const Mat6z& o) const = default;
  Mat6z operator*(const Mat6z& o) const;
};

Mat6d exterior_square(const Mat4d& g);
Mat6z exterior_square(const Mat4z& g);

} // namespace sp4
