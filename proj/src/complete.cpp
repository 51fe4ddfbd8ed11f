#include "sp4/complete.hpp"

#include "sp4/lattice.hpp"

#include <cassert>
#include <tuple>

namespace sp4 {

namespace {

// Symplectic pairing of row vectors: B(x, y) = x1 y3 + x2 y4 - x3 y1 - x4 y2.
template <typename T>
T jpair(const std::array<T, 4>& x, const std::array<T, 4>& y) {
  return x[0] * y[2] + x[1] * y[3] - x[2] * y[0] - x[3] * y[1];
}

std::pair<Int, std::pair<Int, Int>> egcd(const Int& a, const Int& b) {
  if (b == 0) return {a >= 0 ? a : -a, {a >= 0 ? Int(1) : Int(-1), Int(0)}};
  Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, x2 = x0 - q * x1, y2 = y0 - q * y1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
    y0 = y1; y1 = y2;
  }
  if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
  return {r0, {x0, y0}};
}

Int mod_inverse_int(const Int& a, const Int& m) {
  auto [g, xy] = egcd(mod_floor_int(a, m), m);
  if (g != 1) throw std::domain_error("mod_inverse_int: arguments not coprime");
  return mod_floor_int(xy.first, m);
}

} // namespace

Mat4z complete_rows(const std::array<Int, 4>& r3, const std::array<Int, 4>& r4) {
  assert(jpair(r3, r4) == 0);
  // X * (J B^T) = I2 over Z; solvable iff the 2x2 minor gcd of B is 1.
  ZMat m(4, std::vector<Int>(2));
  // J B^T columns are J r3^T, J r4^T with J rows: e3, e4, -e1, -e2.
  const std::array<Int, 4>* rows[2] = {&r3, &r4};
  for (int c = 0; c < 2; ++c) {
    const auto& r = *rows[c];
    m[0][c] = r[2];
    m[1][c] = r[3];
    m[2][c] = -r[0];
    m[3][c] = -r[1];
  }
  ZMat id2 = zmat_identity(2);
  ZMat x = solve_left(m, id2);
  std::array<Int, 4> x1{x[0][0], x[0][1], x[0][2], x[0][3]};
  std::array<Int, 4> x2{x[1][0], x[1][1], x[1][2], x[1][3]};
  Int c = jpair(x1, x2);
  for (int i = 0; i < 4; ++i) x1[i] += c * r4[i];

  Mat4z g;
  for (int j = 0; j < 4; ++j) {
    g(0, j) = x1[j];
    g(1, j) = x2[j];
    g(2, j) = r3[j];
    g(3, j) = r4[j];
  }
  assert(is_symplectic(g));
  return g;
}

Mat4z complete_to_gamma(const PlueckerVec& p) {
  if (!p.all_ok() || !p.is_integral_point())
    throw std::domain_error("complete_to_gamma: invalid or imprimitive coordinates");

  std::array<Int, 4> r4;
  if (p.v1() == 0 && p.v2() == 0 && p.v3() == 0) {
    // v4 = +-1 and all minors except v14, v34 vanish.
    const Int& v4 = p.v4();
    assert(v4 == 1 || v4 == -1);
    r4 = {-p.v14() / v4, 0, -p.v34() / v4, 0};
  } else {
    // xi_1 v1 + xi_2 v2 + xi_3 v3 = 1 with xi in (1/d) Z, d = gcd(v1, v2, v3).
    auto [g12, c12] = egcd(p.v1(), p.v2());
    auto [d, cu] = egcd(g12, p.v3());
    Int c1 = c12.first * cu.first;
    Int c2 = c12.second * cu.first;
    Int c3 = cu.second;
    assert(c1 * p.v1() + c2 * p.v2() + c3 * p.v3() == d && d > 0);
    // d-scaled row: d * a4j; each is divisible by d for j = 1, 2, 3 because
    // d | v12, v13, v23 (incidence against the coprime v4).
    Int da1 = -c3 * p.v13() - c2 * p.v12();
    Int da2 = c1 * p.v12() - c3 * p.v23();
    Int da3 = c2 * p.v23() + c1 * p.v13();
    Int da4 = c1 * p.v14() + c2 * p.v24() + c3 * p.v34();
    assert(da1 % d == 0 && da2 % d == 0 && da3 % d == 0);
    // Shear by (n/d) * row3 to force the last coordinate integral:
    // gcd(v4, d) = 1 since the primary gcd is 1.
    Int n = 0;
    if (d > 1) n = mod_floor_int(-da4 * mod_inverse_int(p.v4(), d), d);
    r4 = {(da1 + n * p.v1()) / d, (da2 + n * p.v2()) / d, (da3 + n * p.v3()) / d,
          (da4 + n * p.v4()) / d};
  }

  PlueckerVec check = pluecker_rows(p.v, r4);
  assert(check == p);
  (void)check;
  return complete_rows(p.v, r4);
}

Mat4q complete_to_sp4q(const PlueckerVec& p) {
  if (!p.all_ok()) throw std::domain_error("complete_to_sp4q: invalid coordinates");
  bool primary_zero = p.v1() == 0 && p.v2() == 0 && p.v3() == 0 && p.v4() == 0;
  bool secondary_zero = true;
  for (const Int& x : p.w)
    if (x != 0) secondary_zero = false;
  if (primary_zero || secondary_zero)
    throw std::domain_error("complete_to_sp4q: rows not of full rank");

  std::array<Rat, 4> r3{Rat(p.v1()), Rat(p.v2()), Rat(p.v3()), Rat(p.v4())};
  std::array<Rat, 4> r4;
  if (p.v1() == 0 && p.v2() == 0 && p.v3() == 0) {
    Rat v4(p.v4());
    r4 = {-Rat(p.v14()) / v4, Rat(0), -Rat(p.v34()) / v4, Rat(0)};
  } else {
    // xi = e_k / v_k on the first nonzero coordinate.
    int k = p.v1() != 0 ? 0 : (p.v2() != 0 ? 1 : 2);
    Rat xi1 = 0, xi2 = 0, xi3 = 0;
    if (k == 0) xi1 = Rat(1) / Rat(p.v1());
    if (k == 1) xi2 = Rat(1) / Rat(p.v2());
    if (k == 2) xi3 = Rat(1) / Rat(p.v3());
    r4[0] = -xi3 * Rat(p.v13()) - xi2 * Rat(p.v12());
    r4[1] = xi1 * Rat(p.v12()) - xi3 * Rat(p.v23());
    r4[2] = xi2 * Rat(p.v23()) + xi1 * Rat(p.v13());
    r4[3] = xi1 * Rat(p.v14()) + xi2 * Rat(p.v24()) + xi3 * Rat(p.v34());
  }

  // Solve X (J B^T) = I2 over Q through a 2x2 invertible submatrix.
  Rat m[4][2];
  for (int i = 0; i < 4; ++i) {
    m[i][0] = (i == 0 ? r3[2] : i == 1 ? r3[3] : i == 2 ? -r3[0] : -r3[1]);
    m[i][1] = (i == 0 ? r4[2] : i == 1 ? r4[3] : i == 2 ? -r4[0] : -r4[1]);
  }
  int ri = -1, rj = -1;
  Rat det;
  for (int i = 0; i < 4 && ri < 0; ++i)
    for (int j = i + 1; j < 4; ++j) {
      det = m[i][0] * m[j][1] - m[i][1] * m[j][0];
      if (det != 0) { ri = i; rj = j; break; }
    }
  if (ri < 0) throw std::domain_error("complete_to_sp4q: rows not of full rank");
  std::array<Rat, 4> x1{}, x2{};
  // [x1; x2] restricted to columns (ri, rj) is the inverse of the submatrix.
  x1[ri] = m[rj][1] / det;
  x1[rj] = -m[ri][1] / det;
  x2[ri] = -m[rj][0] / det;
  x2[rj] = m[ri][0] / det;
  Rat c = jpair(x1, x2);
  for (int i = 0; i < 4; ++i) x1[i] += c * r4[i];

  Mat4q g;
  for (int j = 0; j < 4; ++j) {
    g(0, j) = x1[j];
    g(1, j) = x2[j];
    g(2, j) = r3[j];
    g(3, j) = r4[j];
  }
  if (!is_symplectic(g)) throw std::domain_error("complete_to_sp4q: internal error");
  return g;
}

Mat4z complete_beta(const std::array<Int, 4>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  if (g != 1) throw std::domain_error("complete_beta: vector not primitive");
  // Saturated kernel of the pairing against v, then a basis of it through v.
  ZMat a(1, std::vector<Int>(4));
  a[0][0] = v[2];
  a[0][1] = v[3];
  a[0][2] = -v[0];
  a[0][3] = -v[1];
  ZMat kern = integer_kernel(a); // 3 x 4
  assert(kern.size() == 3);
  ZMat coeff = solve_left(kern, ZMat{std::vector<Int>(v.begin(), v.end())});
  std::vector<Int> c = {coeff[0][0], coeff[0][1], coeff[0][2]};
  ZMat u = extend_to_unimodular(c);
  ZMat nb = zmat_mul(u, kern);
  std::array<Int, 4> vrow{nb[0][0], nb[0][1], nb[0][2], nb[0][3]};
  std::array<Int, 4> urow{nb[1][0], nb[1][1], nb[1][2], nb[1][3]};
  assert(vrow == v);
  (void)vrow;
  return complete_rows(urow, v);
}

Mat4z complete_alpha(const std::array<Int, 6>& w) {
  Int g = 0;
  for (const Int& x : w) g = gcd_int(g, x);
  if (g != 1) throw std::domain_error("complete_alpha: wedge vector not primitive");
  if (w[1] + w[4] != 0) throw std::domain_error("complete_alpha: trace relation fails");
  if (w[0] * w[5] - w[1] * w[4] + w[2] * w[3] != 0)
    throw std::domain_error("complete_alpha: quadric relation fails");
  // x wedge w = 0 as a 4x4 system over the Lambda^3 coordinates.
  const Int &w12 = w[0], &w13 = w[1], &w14 = w[2], &w23 = w[3], &w24 = w[4], &w34 = w[5];
  ZMat a(4, std::vector<Int>(4));
  a[0] = {w23, -w13, w12, Int(0)};
  a[1] = {w24, -w14, Int(0), w12};
  a[2] = {w34, Int(0), -w14, w13};
  a[3] = {Int(0), w34, -w24, w23};
  ZMat kern = integer_kernel(a);
  if (kern.size() != 2)
    throw std::domain_error("complete_alpha: wedge vector not decomposable");
  std::array<Int, 4> r3{kern[0][0], kern[0][1], kern[0][2], kern[0][3]};
  std::array<Int, 4> r4{kern[1][0], kern[1][1], kern[1][2], kern[1][3]};
  PlueckerVec p = pluecker_rows(r3, r4);
  bool matches = true, negated = true;
  for (int i = 0; i < 6; ++i) {
    if (p.w[i] != w[i]) matches = false;
    if (p.w[i] != -w[i]) negated = false;
  }
  if (!matches && negated) {
    std::swap(r3, r4);
    matches = true;
  }
  if (!matches) throw std::domain_error("complete_alpha: kernel basis mismatch");
  return complete_rows(r3, r4);
}

} // namespace sp4
