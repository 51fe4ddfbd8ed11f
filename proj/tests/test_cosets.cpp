// Tests for the parabolic coset enumeration: the per-cell representative
// families, their defining arithmetic conditions, round trips through
// integral completion, and an independent bounded matrix search that must
// reproduce the enumerated coset classes exactly.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sp4/bruhat.hpp"
#include "sp4/complete.hpp"
#include "sp4/cosets.hpp"
#include "sp4/pluecker.hpp"
#include "sp4/weyl.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

using namespace sp4;

namespace {

using std::int64_t;

// ---------------------------------------------------------------------------
// Canonical form of a coordinate point modulo the free unipotent directions
// of its cell and the row-sign ambiguity. Two points are in the same coset
// class iff their canonical forms agree, so set comparisons between the
// enumeration and a brute-force search go through this reduction.
// ---------------------------------------------------------------------------

// Unipotent matrix with a single coordinate set (dir: 0->n1, 1->n2, 2->n4,
// 3->n5). One-parameter in each single direction, so powers add.
Mat4z u_single(int dir, const Int& n) {
  Mat4z m = Mat4z::identity();
  switch (dir) {
    case 0: m(0, 1) = n; m(3, 2) = -n; break;
    case 1: m(0, 2) = n; break;
    case 2: m(0, 3) = n; m(1, 2) = n; break;
    case 3: m(1, 3) = n; break;
    default: REQUIRE(false);
  }
  return m;
}

// Right action of u_single on the coordinates: row 3 transforms by the
// matrix itself, the minors by its exterior square.
PlueckerVec act(const PlueckerVec& p, int dir, const Int& n) {
  Mat4z u = u_single(dir, n);
  Mat6z w6 = exterior_square(u);
  PlueckerVec q;
  for (int j = 0; j < 4; ++j) {
    Int s = 0;
    for (int i = 0; i < 4; ++i) s += p.v[i] * u(i, j);
    q.v[j] = s;
  }
  for (int k = 0; k < 6; ++k) {
    Int s = 0;
    for (int j = 0; j < 6; ++j) s += p.w[j] * w6(j, k);
    q.w[k] = s;
  }
  return q;
}

struct CanonKey {
  int cell = 0;
  std::array<int64_t, 10> c{};
  auto operator<=>(const CanonKey&) const = default;
};

// Index of the sign-pivot coordinate per cell (guaranteed nonzero there):
// primary pivot fixes the sign of row 3, secondary pivot the sign of row 4.
constexpr int kVPivot[8] = {2, 3, 2, 1, 3, 0, 1, 0};
constexpr int kWPivot[8] = {5, 5, 3, 3, 2, 2, 0, 0};

struct Move {
  int dir;    // unipotent direction
  bool in_w;  // target coordinate lives in the minor vector
  int idx;    // index of the target coordinate
};

// Per-cell pinning order. Each move normalizes its target into [0, modulus)
// without disturbing previously pinned targets; the shift size is read off
// from a probe, so the reduction self-calibrates instead of hard-coding the
// moduli.
const std::vector<Move>& moves_for(int cell) {
  static const std::vector<Move> table[8] = {
      /* id   */ {},
      /* a    */ {{0, false, 2}},
      /* b    */ {{3, true, 5}},
      /* ab   */ {{2, false, 2}, {3, false, 3}},
      /* ba   */ {{0, true, 4}, {1, true, 5}},
      /* aba  */ {{0, false, 1}, {2, false, 3}, {1, false, 2}},
      /* bab  */ {{3, true, 2}, {2, true, 1}, {1, true, 3}},
      /* abab */ {{0, false, 1}, {3, true, 2}, {2, true, 1}, {1, false, 2}},
  };
  return table[cell];
}

CanonKey canon_of(PlueckerVec p) {
  REQUIRE(p.all_ok());
  REQUIRE(p.is_integral_point());
  int cell = static_cast<int>(bruhat_cell(p));

  REQUIRE(p.v[kVPivot[cell]] != 0);
  if (p.v[kVPivot[cell]] < 0) {
    for (auto& x : p.v) x = -x;
    for (auto& x : p.w) x = -x;
  }
  REQUIRE(p.w[kWPivot[cell]] != 0);
  if (p.w[kWPivot[cell]] < 0)
    for (auto& x : p.w) x = -x;

  std::vector<std::pair<Move, Int>> pinned;  // move + modulus, for the final window check
  for (const Move& mv : moves_for(cell)) {
    const Int cur = mv.in_w ? p.w[mv.idx] : p.v[mv.idx];
    PlueckerVec probe = act(p, mv.dir, 1);
    Int delta = (mv.in_w ? probe.w[mv.idx] : probe.v[mv.idx]) - cur;
    REQUIRE(delta != 0);
    Int m = abs(delta);
    Int target = mod_floor_int(cur, m);
    Int steps = (target - cur) / delta;
    REQUIRE(steps * delta == target - cur);
    p = act(p, mv.dir, steps);
    REQUIRE((mv.in_w ? p.w[mv.idx] : p.v[mv.idx]) == target);
    pinned.emplace_back(mv, m);
  }
  // Later moves must not have disturbed earlier targets.
  for (const auto& [mv, m] : pinned) {
    const Int& x = mv.in_w ? p.w[mv.idx] : p.v[mv.idx];
    REQUIRE((x >= 0 && x < m));
  }
  REQUIRE(p.all_ok());
  REQUIRE(static_cast<int>(bruhat_cell(p)) == cell);

  CanonKey k;
  k.cell = cell;
  for (int i = 0; i < 4; ++i) k.c[i] = static_cast<int64_t>(p.v[i]);
  for (int i = 0; i < 6; ++i) k.c[4 + i] = static_cast<int64_t>(p.w[i]);
  return k;
}

PlueckerVec from_key(const CanonKey& k) {
  PlueckerVec p;
  for (int i = 0; i < 4; ++i) p.v[i] = k.c[i];
  for (int i = 0; i < 6; ++i) p.w[i] = k.c[4 + i];
  return p;
}

int64_t phi_sum(int64_t bound) {
  int64_t s = 0;
  for (int64_t n = 1; n <= bound; ++n)
    for (int64_t r = 0; r < n; ++r) s += std::gcd(n, r) == 1 ? 1 : 0;
  return s;
}

} // namespace

TEST_CASE("representative families satisfy their defining conditions") {
  // Identity cell: a single representative regardless of bound.
  auto rid = enumerate_r(Weyl::id, 10);
  REQUIRE(rid.size() == 1);
  CHECK(rid[0].p.v == std::array<Int, 4>{0, 0, 1, 0});
  CHECK(rid[0].p.w == std::array<Int, 6>{0, 0, 0, 0, 0, 1});

  // One-step cells: totient counts, coprime residues, unit minor part.
  auto ra = enumerate_r(Weyl::a, 5);
  CHECK(ra.size() == 10);
  CHECK(Int(phi_sum(5)) == Int(ra.size()));
  for (const auto& r : ra) {
    CHECK(r.p.v1() == 0);
    CHECK(r.p.v2() == 0);
    CHECK(r.p.v4() >= 1);
    CHECK((r.p.v3() >= 0 && r.p.v3() < r.p.v4()));
    CHECK(gcd_int(r.p.v3(), r.p.v4()) == 1);
    CHECK(r.p.w == std::array<Int, 6>{0, 0, 0, 0, 0, 1});
  }
  auto rb = enumerate_r(Weyl::b, 5);
  CHECK(rb.size() == 10);
  for (const auto& r : rb) {
    CHECK(r.p.v == std::array<Int, 4>{0, 0, 1, 0});
    CHECK(r.p.v23() >= 1);
    CHECK((r.p.v34() >= 0 && r.p.v34() < r.p.v23()));
    CHECK(gcd_int(r.p.v23(), r.p.v34()) == 1);
  }

  // Two-step cell ab: minor part determined by d = gcd(v2, v4).
  for (const auto& r : enumerate_r(Weyl::ab, 6)) {
    Int v2 = r.p.v2(), v3 = r.p.v3(), v4 = r.p.v4();
    CHECK(v2 >= 1);
    CHECK((v3 >= 0 && v3 < v2));
    CHECK((v4 >= 0 && v4 < v2));
    CHECK(gcd_int(gcd_int(v2, v3), v4) == 1);
    REQUIRE(r.witness.size() == 1);
    Int d = r.witness[0].second;
    CHECK(d == gcd_int(v2, v4));
    CHECK(r.p.w == std::array<Int, 6>{0, 0, 0, v2 / d, 0, -v4 / d});
  }

  // Two-step cell ba: v14 | d^2 with d = gcd(v14, v24), and the derived
  // cofactor d' = d^2 / v14 must be coprime to the residue v34.
  int64_t n_ba = 0;
  for (const auto& r : enumerate_r(Weyl::ba, 4)) {
    ++n_ba;
    Int v14 = r.p.v14(), v24 = r.p.v24(), v34 = r.p.v34();
    CHECK(v14 >= 1);
    CHECK((v24 >= 0 && v24 < v14));
    CHECK((v34 >= 0 && v34 < v14));
    Int d = gcd_int(v14, v24);
    REQUIRE(r.witness.size() == 2);
    CHECK(r.witness[0].second == d);
    CHECK((d * d) % v14 == 0);
    Int dp = d * d / v14;
    CHECK(r.witness[1].second == dp);
    CHECK(gcd_int(dp, v34) == 1);
    CHECK(r.p.v == std::array<Int, 4>{0, 0, -v24 / d, v14 / d});
    CHECK(r.p.v13() == -v24);
    CHECK(r.p.v12() == 0);
    CHECK(r.p.v14() * r.p.v23() == -v24 * v24);
  }
  CHECK(n_ba > 0);

  // Three-step cell aba: minor part determined by d = gcd(v1, v2) and
  // delta = gcd(d, v1' v3 + v2' v4).
  for (const auto& r : enumerate_r(Weyl::aba, 5)) {
    Int v1 = r.p.v1(), v2 = r.p.v2(), v3 = r.p.v3(), v4 = r.p.v4();
    CHECK(v1 >= 1);
    CHECK((v2 >= 0 && v2 < v1));
    CHECK((v3 >= 0 && v3 < v1));
    CHECK((v4 >= 0 && v4 < v1));
    Int d = gcd_int(v1, v2);
    CHECK(gcd_int(d, gcd_int(v3, v4)) == 1);
    Int delta = gcd_int(d, (v1 / d) * v3 + (v2 / d) * v4);
    REQUIRE(r.witness.size() == 2);
    CHECK(r.witness[0].second == d);
    CHECK(r.witness[1].second == delta);
    Int dd = d * delta;
    CHECK(r.p.w == std::array<Int, 6>{0, -(v1 * v2) / dd, (v1 * v1) / dd, -(v2 * v2) / dd,
                                      (v1 * v2) / dd, (v1 * v3 + v2 * v4) / dd});
  }

  // Three-step cell bab: row part is the primitive scaling of the minor
  // triple, and the quadric determines v34 from the emitted residues.
  for (const auto& r : enumerate_r(Weyl::bab, 6)) {
    Int v12 = r.p.v12(), v13 = r.p.v13(), v14 = r.p.v14(), v23 = r.p.v23();
    CHECK(v12 >= 1);
    CHECK((v13 >= 0 && v13 < v12));
    CHECK((v14 >= 0 && v14 < v12));
    CHECK((v23 >= 0 && v23 < v12));
    CHECK(r.p.v24() == -v13);
    CHECK((v13 * v13 + v14 * v23) % v12 == 0);
    CHECK(r.p.v34() * v12 == -(v13 * v13 + v14 * v23));
    Int d0 = gcd_int(gcd_int(v12, v13), v14);
    REQUIRE(r.witness.size() == 4);
    CHECK(r.witness[0].second == d0);
    CHECK(r.p.v == std::array<Int, 4>{0, v12 / d0, v13 / d0, v14 / d0});
    // Secondary divisor data: d1 = gcd(v12, v14) divides v13^2, and the
    // residue class of v23 is constrained mod d1 through t = gcd(v13^2/d1, d1).
    Int d1 = gcd_int(v12, v14);
    CHECK(r.witness[1].second == d1);
    CHECK((v13 * v13) % d1 == 0);
    Int t = gcd_int(v13 * v13 / d1, d1);
    CHECK(r.witness[2].second == t);
    CHECK(t == d0 / (d1 / d0));
  }

  // Long cell: linear and quadric relations among the lifted coordinates.
  for (const auto& r : enumerate_r(Weyl::abab, 4)) {
    Int v1 = r.p.v1(), v2 = r.p.v2(), v3 = r.p.v3(), v4 = r.p.v4();
    Int v12 = r.p.v12(), v13 = r.p.v13(), v14 = r.p.v14();
    CHECK(v1 >= 1);
    CHECK(v12 >= 1);
    CHECK((v2 >= 0 && v2 < v1));
    CHECK((v3 >= 0 && v3 < v1));
    CHECK((v4 >= 0 && v4 < v1));
    CHECK((v14 >= 0 && v14 < v12));
    CHECK(v1 * v13 + v2 * v14 - v4 * v12 == 0);
    CHECK(r.p.v24() == -v13);
    CHECK(v1 * r.p.v23() == v2 * v13 - v3 * v12);
    CHECK(v1 * r.p.v34() == v3 * v14 - v4 * v13);
  }

  // Every emitted representative, all cells: valid integral point, correct
  // cell classification, governing modulus within the bound, deterministic
  // re-enumeration, and nondecreasing modulus for the single-modulus cells.
  for (Weyl cell : all_weyl) {
    auto reps = enumerate_r(cell, 4);
    auto again = enumerate_r(cell, 4);
    REQUIRE(reps.size() == again.size());
    Int prev = 0;
    for (size_t i = 0; i < reps.size(); ++i) {
      CHECK(reps[i].p == again[i].p);
      CHECK(reps[i].p.all_ok());
      CHECK(reps[i].p.is_integral_point());
      CHECK(bruhat_cell(reps[i].p) == cell);
      Int m = coset_modulus(reps[i]);
      CHECK(m >= 1);
      CHECK(m <= 4);
      if (cell != Weyl::abab) {
        CHECK(m >= prev);
        prev = m;
      }
    }
  }

  CHECK_THROWS_AS(enumerate_r(Weyl::a, 3'000'000), budget_exceeded);

  // Early-stop sink contract.
  int taken = 0;
  enumerate_r(Weyl::a, 5, [&](const CosetRep&) { return ++taken < 3; });
  CHECK(taken == 3);
}

TEST_CASE("representatives complete to integral symplectic matrices and refactor") {
  for (Weyl cell : all_weyl) {
    int64_t bound = (cell == Weyl::abab) ? 3 : 4;
    auto reps = enumerate_r(cell, bound);
    REQUIRE(!reps.empty());
    std::set<std::array<Int, 10>> raw;
    for (const auto& r : reps) {
      // Distinct coordinate tuples.
      std::array<Int, 10> t;
      std::copy(r.p.v.begin(), r.p.v.end(), t.begin());
      std::copy(r.p.w.begin(), r.p.w.end(), t.begin() + 4);
      CHECK(raw.insert(t).second);

      // Round trip through integral completion.
      Mat4z g = complete_to_gamma(r.p);
      CHECK(is_symplectic(g));
      CHECK(pluecker(g) == r.p);

      // The triangular-Weyl-triangular factorization lands in the same cell.
      BruhatFactors f = bruhat_factor(g);
      CHECK(f.w == cell);
    }
  }

  // Long-cell counting helper agrees with the per-layer enumeration counts.
  for (int64_t v1 = 1; v1 <= 4; ++v1)
    for (int64_t v12 = 1; v12 <= 4; ++v12) {
      int64_t direct = 0;
      for (const auto& r : enumerate_r(Weyl::abab, 4))
        if (r.p.v1() == v1 && r.p.v12() == v12) ++direct;
      CHECK(count_long_cell(v1, v12) == direct);
    }
}

TEST_CASE("canonical reduction fixes emitted representatives") {
  // For the seven cells whose residues are pinned in the same windows the
  // enumeration uses, the canonical form of an emitted representative is the
  // representative itself. The long cell stores a different (exact-relation)
  // lift of v13, so there the check is idempotence and cell stability.
  for (Weyl cell : all_weyl) {
    int64_t bound = (cell == Weyl::abab) ? 3 : 5;
    for (const auto& r : enumerate_r(cell, bound)) {
      CanonKey k = canon_of(r.p);
      CHECK(k.cell == static_cast<int>(cell));
      if (cell != Weyl::abab) {
        CHECK(from_key(k) == r.p);
      } else {
        CHECK(canon_of(from_key(k)) == k);
      }
    }
  }
}

TEST_CASE("bounded matrix search reproduces the enumerated classes") {
  // Independent oracle: enumerate all integral isotropic row pairs (r3, r4)
  // with entries in [-E, E], keep those whose coordinates form an integral
  // point, and reduce each to its canonical class representative. Every
  // class found this way must be emitted by the enumeration; for the cells
  // whose classes at small modulus provably fit in the box, the two sets
  // must agree exactly.
  constexpr int64_t E = 3;

  // Primitive rows with positive leading entry (row signs are quotiented by
  // the canonical reduction, so half the box suffices).
  std::vector<std::array<int64_t, 4>> rows;
  for (int64_t a = -E; a <= E; ++a)
    for (int64_t b = -E; b <= E; ++b)
      for (int64_t c = -E; c <= E; ++c)
        for (int64_t d = -E; d <= E; ++d) {
          std::array<int64_t, 4> r{a, b, c, d};
          int64_t g = 0;
          for (int64_t x : r) g = std::gcd(g, x < 0 ? -x : x);
          if (g != 1) continue;
          bool lead_pos = false;
          for (int64_t x : r) {
            if (x != 0) {
              lead_pos = x > 0;
              break;
            }
          }
          if (lead_pos) rows.push_back(r);
        }

  std::set<std::array<int64_t, 10>> seen;
  std::set<CanonKey> oracle;
  for (const auto& r3 : rows)
    for (const auto& r4 : rows) {
      // Symplectic pairing of the two rows must vanish.
      if (r3[0] * r4[2] + r3[1] * r4[3] - r3[2] * r4[0] - r3[3] * r4[1] != 0) continue;
      std::array<int64_t, 10> t;
      for (int i = 0; i < 4; ++i) t[i] = r3[i];
      t[4] = r3[0] * r4[1] - r3[1] * r4[0];
      t[5] = r3[0] * r4[2] - r3[2] * r4[0];
      t[6] = r3[0] * r4[3] - r3[3] * r4[0];
      t[7] = r3[1] * r4[2] - r3[2] * r4[1];
      t[8] = r3[1] * r4[3] - r3[3] * r4[1];
      t[9] = r3[2] * r4[3] - r3[3] * r4[2];
      int64_t gw = 0;
      for (int i = 4; i < 10; ++i) gw = std::gcd(gw, t[i] < 0 ? -t[i] : t[i]);
      if (gw != 1) continue;
      if (!seen.insert(t).second) continue;
      PlueckerVec p;
      for (int i = 0; i < 4; ++i) p.v[i] = t[i];
      for (int i = 0; i < 6; ++i) p.w[i] = t[4 + i];
      REQUIRE(p.all_ok());
      oracle.insert(canon_of(p));
    }
  REQUIRE(oracle.size() > 50);

  // Enumerated classes out to the largest modulus the box can reach: the
  // primary coordinates are bounded by E, minors by 2 E^2; for cells whose
  // governing modulus is a primary coordinate the reach is E.
  std::set<CanonKey> emitted;
  size_t n_emitted = 0;
  auto absorb = [&](Weyl cell, int64_t bound, int64_t v1_cap) {
    for (const auto& r : enumerate_r(cell, bound)) {
      if (v1_cap && r.p.v1() > v1_cap) continue;
      ++n_emitted;
      CanonKey k = canon_of(r.p);
      CHECK(k.cell == static_cast<int>(cell));
      emitted.insert(k);
    }
  };
  absorb(Weyl::id, 1, 0);
  absorb(Weyl::a, E, 0);
  absorb(Weyl::b, E, 0);              // v23 = -v3 b with v3 = +-1, so reach is E
  absorb(Weyl::ab, E, 0);
  absorb(Weyl::ba, E * E, 0);         // v14 = -v4 a
  absorb(Weyl::aba, E, 0);
  absorb(Weyl::bab, E * E, 0);        // v12 = -v2 a
  absorb(Weyl::abab, 2 * E * E, E);   // v12 = v1 b - v2 a; primary part bounded by E
  // No two representatives reduce to the same class.
  CHECK(emitted.size() == n_emitted);

  // Exhaustiveness: the search finds nothing the enumeration misses.
  std::vector<CanonKey> missing;
  for (const auto& k : oracle)
    if (!emitted.count(k)) missing.push_back(k);
  CHECK(missing.empty());

  // Exact agreement on the cells where every class within the modulus range
  // of the enumeration is realizable inside the box: the identity cell and
  // the two one-step cells (completions with unit cofactor rows exist with
  // entries at most E there).
  for (Weyl cell : {Weyl::id, Weyl::a, Weyl::b}) {
    size_t in_oracle = 0;
    for (const auto& k : oracle)
      if (k.cell == static_cast<int>(cell)) ++in_oracle;
    size_t expect = cell == Weyl::id ? 1 : static_cast<size_t>(phi_sum(E));
    CHECK(in_oracle == expect);
  }

  // Reverse membership: every small-modulus representative whose completion
  // can be moved into the box by free-direction translates, a column shear,
  // and row signs must have been found by the search.
  auto fits = [&](const std::array<int64_t, 4>& r) {
    for (int64_t x : r)
      if (x < -E || x > E) return false;
    return true;
  };
  size_t realizable = 0, checked = 0;
  for (Weyl cell : all_weyl) {
    for (const auto& rep : enumerate_r(cell, 2)) {
      ++checked;
      Mat4z g = complete_to_gamma(rep.p);
      std::array<int64_t, 4> r3, r4;
      for (int j = 0; j < 4; ++j) {
        r3[j] = static_cast<int64_t>(g(2, j));
        r4[j] = static_cast<int64_t>(g(3, j));
      }
      // Scan small products of the cell's free one-parameter directions.
      int mask = weyl_direction_mask(cell);
      std::vector<int> dirs;
      for (int d = 0; d < 4; ++d)
        if (mask & (1 << d)) dirs.push_back(d);
      std::vector<int> steps(dirs.size(), -3);
      bool found = false;
      while (!found) {
        std::array<int64_t, 4> s3 = r3, s4 = r4;
        for (size_t i = 0; i < dirs.size(); ++i) {
          Mat4z u = u_single(dirs[i], steps[i]);
          auto mul = [&](std::array<int64_t, 4>& row) {
            std::array<int64_t, 4> out{};
            for (int j = 0; j < 4; ++j)
              for (int k = 0; k < 4; ++k)
                out[j] += row[k] * static_cast<int64_t>(u(k, j));
            row = out;
          };
          mul(s3);
          mul(s4);
        }
        if (fits(s3)) {
          for (int64_t c = -2 * E; c <= 2 * E && !found; ++c) {
            std::array<int64_t, 4> s4c;
            for (int j = 0; j < 4; ++j) s4c[j] = s4[j] + c * s3[j];
            if (fits(s4c)) found = true;
          }
        }
        // Advance the multi-index.
        size_t i = 0;
        for (; i < dirs.size(); ++i) {
          if (++steps[i] <= 3) break;
          steps[i] = -3;
        }
        if (i == dirs.size()) break;
        if (dirs.empty()) break;
      }
      if (found) {
        ++realizable;
        CHECK(oracle.count(canon_of(rep.p)) == 1);
      }
    }
  }
  // The box is generous at modulus <= 2: nearly everything is realizable.
  CHECK(checked > 20);
  CHECK(realizable * 4 >= checked * 3);
}
