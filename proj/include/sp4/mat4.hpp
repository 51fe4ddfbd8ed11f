#pragma once

#include "sp4/common.hpp"

#include <array>
#include <iosfwd>

namespace sp4 {

// Dense 4x4 matrices over Z, Q and double, row major. These are small value
// types; all arithmetic is written out directly.

struct Mat4d {
  std::array<double, 16> a{};

  double& operator()(int i, int j) { return a[4 * i + j]; }
  double operator()(int i, int j) const { return a[4 * i + j]; }

  static Mat4d identity();
  Mat4d operator*(const Mat4d& o) const;
  Mat4d transpose() const;
};

struct Mat4z;

struct Mat4q {
  std::array<Rat, 16> a{};

  Rat& operator()(int i, int j) { return a[4 * i + j]; }
  const Rat& operator()(int i, int j) const { return a[4 * i + j]; }

  static Mat4q identity();
  Mat4q operator*(const Mat4q& o) const;
  bool operator==(const Mat4q& o) const = default;
  Mat4q transpose() const;
  // Gauss-Jordan; throws std::domain_error on singular input.
  Mat4q inverse() const;
  Rat det() const;
  Mat4d to_double() const;
  bool is_integral() const;
  Mat4z to_integer() const; // requires is_integral()
};

struct Mat4z {
  std::array<Int, 16> a{};

  Int& operator()(int i, int j) { return a[4 * i + j]; }
  const Int& operator()(int i, int j) const { return a[4 * i + j]; }

  static Mat4z identity();
  Mat4z operator*(const Mat4z& o) const;
  bool operator==(const Mat4z& o) const = default;
  Mat4z transpose() const;
  Mat4q to_rational() const;
  Mat4d to_double() const;
};

// The symplectic form: J e1 = -e3, J e2 = -e4, J e3 = e1, J e4 = e2,
// i.e. blocks [[0, I2], [-I2, 0]].
Mat4z symplectic_j();

bool is_symplectic(const Mat4z& m);
bool is_symplectic(const Mat4q& m);
// Max abs residual of M J M^T - J.
double symplectic_residual(const Mat4d& m);

// Serialization: entries as "p" or "p/q", row major, space separated rows
// separated by ';'. parse_mat4q accepts that format.
std::string to_string(const Mat4q& m);
Mat4q parse_mat4q(const std::string& s);

std::ostream& operator<<(std::ostream& os, const Mat4q& m);

} // namespace sp4
