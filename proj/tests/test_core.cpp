#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sp4/bruhat.hpp"
#include "sp4/complete.hpp"
#include "sp4/iwasawa.hpp"
#include "sp4/mat4.hpp"
#include "sp4/pluecker.hpp"
#include "sp4/primitive.hpp"
#include "sp4/unipotent.hpp"
#include "sp4/weyl.hpp"

#include <bit>
#include <cmath>
#include <random>

using namespace sp4;

namespace {

std::mt19937_64 rng(20240901u);

int rnd_small() {
  std::uniform_int_distribution<int> d(-3, 3);
  return d(rng);
}

// Random element of the integral symplectic group as a word in unipotents,
// Weyl representatives and sign tori.
Mat4z random_gamma(int steps) {
  Mat4z g = Mat4z::identity();
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> wpick(0, 7);
  std::uniform_int_distribution<int> spick(0, 1);
  for (int i = 0; i < steps; ++i) {
    switch (pick(rng)) {
      case 0: {
        NCoordsQ n;
        n.n1 = rnd_small();
        n.n2 = rnd_small();
        n.n4 = rnd_small();
        n.n5 = rnd_small();
        g = g * u_matrix(n).to_integer();
        break;
      }
      case 1:
        g = g * weyl_matrix(all_weyl[static_cast<size_t>(wpick(rng))]);
        break;
      default: {
        Mat4z t;
        Int e1 = spick(rng) ? 1 : -1, e2 = spick(rng) ? 1 : -1;
        t(0, 0) = e1; t(1, 1) = e2; t(2, 2) = e1; t(3, 3) = e2;
        g = g * t;
        break;
      }
    }
  }
  return g;
}

NCoordsQ random_ncoords() {
  NCoordsQ n;
  n.n1 = Rat(rnd_small(), 2);
  n.n2 = Rat(rnd_small(), 3);
  n.n4 = Rat(rnd_small(), 2);
  n.n5 = Rat(rnd_small(), 5);
  return n;
}

Mat4d unitary_compact(double t1, double t2, double t3) {
  // A + iB = R(t1) * diag(e^{i t2}, e^{i t3}) is in U(2).
  double c = std::cos(t1), s = std::sin(t1);
  double a11 = c * std::cos(t2), b11 = c * std::sin(t2);
  double a12 = -s * std::cos(t3), b12 = -s * std::sin(t3);
  double a21 = s * std::cos(t2), b21 = s * std::sin(t2);
  double a22 = c * std::cos(t3), b22 = c * std::sin(t3);
  Mat4d k;
  k(0, 0) = a11; k(0, 1) = a12; k(0, 2) = b11; k(0, 3) = b12;
  k(1, 0) = a21; k(1, 1) = a22; k(1, 2) = b21; k(1, 3) = b22;
  k(2, 0) = -b11; k(2, 1) = -b12; k(2, 2) = a11; k(2, 3) = a12;
  k(3, 0) = -b21; k(3, 1) = -b22; k(3, 2) = a21; k(3, 3) = a22;
  return k;
}

} // namespace

TEST_CASE("symplectic form and Weyl representatives") {
  Mat4z j = symplectic_j();
  CHECK(is_symplectic(Mat4z::identity()));
  CHECK(is_symplectic(j));
  // J^2 = -1.
  Mat4z j2 = j * j;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) CHECK(j2(i, k) == (i == k ? -1 : 0));

  for (Weyl w : all_weyl) CHECK(is_symplectic(weyl_matrix(w)));
  CHECK(weyl_matrix(Weyl::ab) == weyl_matrix(Weyl::a) * weyl_matrix(Weyl::b));
  CHECK(weyl_matrix(Weyl::ba) == weyl_matrix(Weyl::b) * weyl_matrix(Weyl::a));
  CHECK(weyl_matrix(Weyl::aba) == weyl_matrix(Weyl::ab) * weyl_matrix(Weyl::a));
  CHECK(weyl_matrix(Weyl::bab) == weyl_matrix(Weyl::b) * weyl_matrix(Weyl::ab));
  CHECK(weyl_matrix(Weyl::abab) == weyl_matrix(Weyl::aba) * weyl_matrix(Weyl::b));
  // The two orderings of the long word agree.
  CHECK(weyl_matrix(Weyl::abab) == weyl_matrix(Weyl::b) * weyl_matrix(Weyl::aba));

  int lengths[8] = {0, 1, 1, 2, 2, 3, 3, 4};
  for (int i = 0; i < 8; ++i) {
    CHECK(weyl_length(all_weyl[static_cast<size_t>(i)]) == lengths[i]);
    CHECK(weyl_unfolded_dims(all_weyl[static_cast<size_t>(i)]) == lengths[i]);
    CHECK(std::popcount(weyl_direction_mask(all_weyl[static_cast<size_t>(i)])) == lengths[i]);
    CHECK(weyl_from_name(weyl_name(all_weyl[static_cast<size_t>(i)])) ==
          all_weyl[static_cast<size_t>(i)]);
  }
}

TEST_CASE("unipotent coordinates: shape, group law, inverse") {
  for (int trial = 0; trial < 50; ++trial) {
    NCoordsQ a = random_ncoords(), b = random_ncoords();
    Mat4q ua = u_matrix(a), ub = u_matrix(b);
    CHECK(is_symplectic(ua));
    auto back = n_coords(ua);
    REQUIRE(back.has_value());
    CHECK(back->n1 == a.n1);
    CHECK(back->n2 == a.n2);
    CHECK(back->n4 == a.n4);
    CHECK(back->n5 == a.n5);

    NCoordsQ c = n_compose(a, b);
    CHECK(u_matrix(c) == ua * ub);
  }
  // Inverse in double coordinates.
  NCoordsD ad{0.5, -1.25, 2.0, 0.75};
  NCoordsD inv = n_inverse(ad);
  Mat4d prod = u_matrix(ad) * u_matrix(inv);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);

  // Non-unipotent input is rejected.
  CHECK(!n_coords(weyl_matrix(Weyl::a).to_rational()).has_value());
  // Symmetric-block and Heisenberg one-parameter families are symplectic.
  CHECK(symplectic_residual(palpha_u_matrix(0.3, -1.7, 2.2)) < 1e-12);
  CHECK(symplectic_residual(pbeta_u_matrix(1.5, -0.25, 3.0)) < 1e-12);
}

TEST_CASE("coordinate extraction and its invariants") {
  PlueckerVec p0 = pluecker(Mat4z::identity());
  CHECK(p0.v == std::array<Int, 4>{0, 0, 1, 0});
  CHECK(p0.w == std::array<Int, 6>{0, 0, 0, 0, 0, 1});
  CHECK(p0.all_ok());
  CHECK(p0.is_integral_point());

  for (int trial = 0; trial < 200; ++trial) {
    Mat4z g = random_gamma(6);
    REQUIRE(is_symplectic(g));
    PlueckerVec p = pluecker(g);
    CHECK(p.all_ok());
    CHECK(p.is_integral_point());
  }
}

TEST_CASE("exterior square is multiplicative and tracks wedge products") {
  for (int trial = 0; trial < 40; ++trial) {
    Mat4z g = random_gamma(5), h = random_gamma(5);
    CHECK(exterior_square(g * h) == exterior_square(g) * exterior_square(h));

    // (r wedge s) * ext(g) = (r g) wedge (s g) read off bottom rows.
    PlueckerVec p = pluecker(h);
    Mat6z e = exterior_square(g);
    Mat4z hg = h * g;
    PlueckerVec q = pluecker(hg);
    for (int col = 0; col < 6; ++col) {
      Int acc = 0;
      for (int k = 0; k < 6; ++k) acc += p.w[static_cast<size_t>(k)] * e(k, col);
      CHECK(acc == q.w[static_cast<size_t>(col)]);
    }
  }
}

TEST_CASE("Iwasawa decomposition round trip") {
  std::uniform_real_distribution<double> yd(0.2, 3.0), nd(-2.0, 2.0), td(0.0, 6.28);
  for (int trial = 0; trial < 100; ++trial) {
    IwasawaPoint p;
    p.n = {nd(rng), nd(rng), nd(rng), nd(rng)};
    p.y1 = yd(rng);
    p.y2 = yd(rng);
    Mat4d k = unitary_compact(td(rng), td(rng), td(rng));
    CHECK(in_maximal_compact(k, 1e-9));
    Mat4d g = embed_iwasawa(p) * k;
    IwasawaPoint q = iwasawa(g);
    CHECK(q.y1 == doctest::Approx(p.y1).epsilon(1e-9));
    CHECK(q.y2 == doctest::Approx(p.y2).epsilon(1e-9));
    CHECK(q.n.n1 == doctest::Approx(p.n.n1).epsilon(1e-8));
    CHECK(q.n.n2 == doctest::Approx(p.n.n2).epsilon(1e-8));
    CHECK(q.n.n4 == doctest::Approx(p.n.n4).epsilon(1e-8));
    CHECK(q.n.n5 == doctest::Approx(p.n.n5).epsilon(1e-8));

    double y1 = 0, y2 = 0;
    double r3[4] = {g(2, 0), g(2, 1), g(2, 2), g(2, 3)};
    double r4[4] = {g(3, 0), g(3, 1), g(3, 2), g(3, 3)};
    iwasawa_ys(r3, r4, y1, y2);
    CHECK(y1 == doctest::Approx(p.y1).epsilon(1e-9));
    CHECK(y2 == doctest::Approx(p.y2).epsilon(1e-9));
  }
  // A non-symplectic matrix is rejected.
  Mat4d bad{};
  bad(0, 0) = 2;
  bad(1, 1) = 1;
  bad(2, 2) = 1;
  bad(3, 3) = 1;
  CHECK_THROWS_AS((void)iwasawa(bad), std::domain_error);
}

TEST_CASE("integral completion of coordinate points") {
  // Identity coset coordinates.
  PlueckerVec p0;
  p0.v = {0, 0, 1, 0};
  p0.w = {0, 0, 0, 0, 0, 1};
  Mat4z g0 = complete_to_gamma(p0);
  CHECK(is_symplectic(g0));
  CHECK(pluecker(g0) == p0);

  // A one-parameter family on the first cell.
  PlueckerVec p7;
  p7.v = {0, 0, 7, 1};
  p7.w = {0, 0, 0, 0, 0, 1};
  REQUIRE(p7.all_ok());
  Mat4z g7 = complete_to_gamma(p7);
  CHECK(is_symplectic(g7));
  CHECK(pluecker(g7) == p7);

  // Imprimitive input is rejected.
  PlueckerVec bad;
  bad.v = {0, 0, 2, 0};
  bad.w = {0, 0, 0, 0, 0, 2};
  REQUIRE(bad.all_ok());
  CHECK_THROWS_AS((void)complete_to_gamma(bad), std::domain_error);

  // Full sweep over all integral points in a small box, both the integral
  // and the rational completion.
  auto pts = enumerate_v0(2);
  CHECK(pts.size() > 100);
  bool identity_seen = false;
  for (const PlueckerVec& p : pts) {
    identity_seen = identity_seen || p == p0;
    Mat4z g = complete_to_gamma(p);
    CHECK(is_symplectic(g));
    CHECK(pluecker(g) == p);
    Mat4q gq = complete_to_sp4q(p);
    CHECK(is_symplectic(gq));
    // The rational completion realizes the same coordinates: row 3 equals v
    // and the 2x2 minors of rows (3,4) equal w, over Q.
    for (int jj = 0; jj < 4; ++jj) CHECK(gq(2, jj) == Rat(p.v[static_cast<size_t>(jj)]));
    int cols[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int kk = 0; kk < 6; ++kk) {
      Rat minor = gq(2, cols[kk][0]) * gq(3, cols[kk][1]) -
                  gq(2, cols[kk][1]) * gq(3, cols[kk][0]);
      CHECK(minor == Rat(p.w[static_cast<size_t>(kk)]));
    }
  }
  CHECK(identity_seen);

  // Rational completion also handles scaled (imprimitive) points.
  PlueckerVec ps;
  ps.v = {0, 0, 3, 0};
  ps.w = {0, 0, 0, 0, 0, 5};
  REQUIRE(ps.all_ok());
  Mat4q gs = complete_to_sp4q(ps);
  CHECK(is_symplectic(gs));
  CHECK(gs(2, 2) == 3);
}

TEST_CASE("single-row and wedge-row completions") {
  for (const auto& v : enumerate_vb(2)) {
    Mat4z g = complete_beta(v);
    CHECK(is_symplectic(g));
    for (int j = 0; j < 4; ++j) CHECK(g(3, j) == v[static_cast<size_t>(j)]);
  }
  for (const auto& w : enumerate_va(2)) {
    Mat4z g = complete_alpha(w);
    CHECK(is_symplectic(g));
    CHECK(pluecker(g).w == w);
  }
  CHECK_THROWS_AS((void)complete_beta({0, 2, 0, 2}), std::domain_error);
  CHECK_THROWS_AS((void)complete_alpha({2, 0, 0, 0, 0, 2}), std::domain_error);
}

TEST_CASE("triangular-Weyl-triangular factorization") {
  // Identity.
  BruhatFactors f0 = bruhat_factor(Mat4z::identity());
  CHECK(f0.w == Weyl::id);
  CHECK(f0.b1 == Mat4q::identity());
  CHECK(f0.d == Mat4q::identity());
  CHECK(f0.b2 == Mat4q::identity());

  // Weyl representative times a rational torus element.
  Mat4q t;
  t(0, 0) = Rat(3, 2); t(1, 1) = Rat(5, 7); t(2, 2) = Rat(2, 3); t(3, 3) = Rat(7, 5);
  for (Weyl w : all_weyl) {
    Mat4q g = weyl_matrix(w).to_rational() * t;
    BruhatFactors f = bruhat_factor(g);
    CHECK(f.w == w);
    CHECK(f.b1 == Mat4q::identity());
    CHECK(f.b2 == Mat4q::identity());
    Mat4q prod = f.b1 * weyl_matrix(f.w).to_rational() * f.d * f.b2;
    CHECK(prod == g);
    // |d| recovers the torus entries up to the sign bookkeeping.
    for (int i = 0; i < 4; ++i) CHECK(abs(f.d(i, i)) == abs(t(i, i)));
  }

  // Random integral group elements: exact refactorization, cell agreement.
  int seen[8] = {0};
  for (int trial = 0; trial < 300; ++trial) {
    Mat4z g = random_gamma(7);
    BruhatFactors f = bruhat_factor(g);
    Mat4q prod = f.b1 * weyl_matrix(f.w).to_rational() * f.d * f.b2;
    CHECK(prod == g.to_rational());
    CHECK(f.w == bruhat_cell(pluecker(g)));
    seen[static_cast<int>(f.w)]++;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) CHECK(f.d(i, j) == 0);
    CHECK(f.d(0, 0) * f.d(2, 2) == 1);
    CHECK(f.d(1, 1) * f.d(3, 3) == 1);
  }
  // The sample should hit the dense cell most often but not exclusively.
  CHECK(seen[7] > 50);
  CHECK(seen[0] > 0);
}

TEST_CASE("matrix parse/print round trip") {
  Mat4q m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Rat(rnd_small() * 7 + 1, 1 + (i + 2) * (j + 1));
  Mat4q back = parse_mat4q(to_string(m));
  CHECK(back == m);
  CHECK_THROWS(parse_mat4q("1 2 3"));
}
