#include "sp4/mat4.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace sp4 {

Mat4d Mat4d::identity() {
  Mat4d m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat4d Mat4d::operator*(const Mat4d& o) const {
  Mat4d r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      double x = (*this)(i, k);
      if (x == 0.0) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Mat4d Mat4d::transpose() const {
  Mat4d r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Mat4q Mat4q::identity() {
  Mat4q m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1;
  return m;
}

Mat4q Mat4q::operator*(const Mat4q& o) const {
  Mat4q r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Mat4q Mat4q::transpose() const {
  Mat4q r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Mat4q Mat4q::inverse() const {
  // Gauss-Jordan with exact pivoting.
  Mat4q a = *this;
  Mat4q inv = Mat4q::identity();
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (a(r, col) != 0) { piv = r; break; }
    if (piv < 0) throw std::domain_error("Mat4q::inverse: singular matrix");
    if (piv != col) {
      for (int j = 0; j < 4; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    Rat d = a(col, col);
    for (int j = 0; j < 4; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rat f = a(r, col);
      for (int j = 0; j < 4; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rat Mat4q::det() const {
  Mat4q a = *this;
  Rat d = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (a(r, col) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < 4; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    Rat p = a(col, col);
    for (int r = col + 1; r < 4; ++r) {
      if (a(r, col) == 0) continue;
      Rat f = a(r, col) / p;
      for (int j = col; j < 4; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return d;
}

Mat4d Mat4q::to_double() const {
  Mat4d m;
  for (int i = 0; i < 16; ++i) m.a[i] = static_cast<double>(a[i]);
  return m;
}

bool Mat4q::is_integral() const {
  for (const Rat& x : a)
    if (den(x) != 1) return false;
  return true;
}

Mat4z Mat4q::to_integer() const {
  Mat4z m;
  for (int i = 0; i < 16; ++i) {
    if (den(a[i]) != 1) throw std::domain_error("Mat4q::to_integer: non-integral entry");
    m.a[i] = num(a[i]);
  }
  return m;
}

Mat4z Mat4z::identity() {
  Mat4z m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1;
  return m;
}

Mat4z Mat4z::operator*(const Mat4z& o) const {
  Mat4z r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Mat4z Mat4z::transpose() const {
  Mat4z r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Mat4q Mat4z::to_rational() const {
  Mat4q m;
  for (int i = 0; i < 16; ++i) m.a[i] = Rat(a[i]);
  return m;
}

Mat4d Mat4z::to_double() const {
  Mat4d m;
  for (int i = 0; i < 16; ++i) m.a[i] = static_cast<double>(a[i]);
  return m;
}

Mat4z symplectic_j() {
  Mat4z j;
  j(0, 2) = 1;
  j(1, 3) = 1;
  j(2, 0) = -1;
  j(3, 1) = -1;
  return j;
}

namespace {

template <typename M>
bool symplectic_exact(const M& m) {
  M j;
  j(0, 2) = 1;
  j(1, 3) = 1;
  j(2, 0) = -1;
  j(3, 1) = -1;
  return m * j * m.transpose() == j;
}

} // namespace

bool is_symplectic(const Mat4z& m) { return symplectic_exact(m); }
bool is_symplectic(const Mat4q& m) { return symplectic_exact(m); }

double symplectic_residual(const Mat4d& m) {
  Mat4d j;
  j(0, 2) = 1;
  j(1, 3) = 1;
  j(2, 0) = -1;
  j(3, 1) = -1;
  Mat4d r = m * j * m.transpose();
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::fabs(r(i, k) - j(i, k)));
  return worst;
}

std::string to_string(const Mat4q& m) {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < 4; ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
  }
  return os.str();
}

Mat4q parse_mat4q(const std::string& s) {
  std::string cleaned = s;
  for (char& c : cleaned)
    if (c == ';' || c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream is(cleaned);
  Mat4q m;
  for (int i = 0; i < 16; ++i) {
    std::string tok;
    if (!(is >> tok)) throw std::invalid_argument("parse_mat4q: expected 16 entries");
    m.a[i] = Rat(tok);
  }
  std::string extra;
  if (is >> extra) throw std::invalid_argument("parse_mat4q: trailing input");
  return m;
}

std::ostream& operator<<(std::ostream& os, const Mat4q& m) {
  return os << to_string(m);
}

} // namespace sp4
