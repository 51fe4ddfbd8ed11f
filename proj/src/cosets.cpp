#include "sp4/cosets.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace sp4 {

namespace {

using std::int64_t;

PlueckerVec make_p(std::initializer_list<int64_t> prim, std::initializer_list<int64_t> sec) {
  PlueckerVec p;
  int i = 0;
  for (int64_t x : prim) p.v[i++] = x;
  i = 0;
  for (int64_t x : sec) p.w[i++] = x;
  return p;
}

bool emit(const std::function<bool(const CosetRep&)>& sink, Weyl cell, PlueckerVec p,
          std::vector<std::pair<const char*, Int>> wit = {}) {
  assert(p.all_ok() && p.is_integral_point());
  CosetRep r{cell, std::move(p), std::move(wit)};
  return sink(r);
}

bool enum_id(int64_t bound, const std::function<bool(const CosetRep&)>& sink) {
  if (bound < 1) return true;
  return emit(sink, Weyl::id, make_p({0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}));
}

bool enum_a(int64_t bound, const std::function<bool(const CosetRep&)>& sink) {
  for (int64_t v4 = 1; v4 <= bound; ++v4)
    for (int64_t v3 = 0; v3 < v4; ++v3) {
      if (std::gcd(v3, v4) != 1) continue;
      if (!emit(sink, Weyl::a, make_p({0, 0, v3, v4}, {0, 0, 0, 0, 0, 1}))) return false;
    }
  return true;
}

bool enum_b(int64_t bound, const std::function<bool(const CosetRep&)>& sink) {
  for (int64_t v23 = 1; v23 <= bound; ++v23)
    for (int64_t v34 = 0; v34 < v23; ++v34) {
      if (std::gcd(v23, v34) != 1) continue;
      if (!emit(sink, Weyl::b, make_p({0, 0, 1, 0}, {0, 0, 0, v23, 0, v34}))) return false;
    }
  return true;
}

bool enum_ab(int64_t bound, const std::function<bool(const CosetRep&)>& sink) {
  for (int64_t v2 = 1; v2 <= bound; ++v2)
    for (int64_t v3 = 0; v3 < v2; ++v3)
      for (int64_t v4 = 0; v4 < v2; ++v4) {
        if (std::gcd(std::gcd(v2, v3), v4) != 1) continue;
        int64_t d = std::gcd(v2, v4);
        if (!emit(sink, Weyl::ab, make_p({0, v2, v3, v4}, {0, 0, 0, v2 / d, 0, -v4 / d}),
                  {{"d", Int(d)}}))
          return false;
      }
  return true;
}

bool enum_ba(int64_t bound, const std::function<bool(const CosetRep&)>& sink) {
  for (int64_t v14 = 1; v14 <= bound; ++v14)
    for (int64_t v24 = 0; v24 < v14; ++v24) {
      int64_t d = std::gcd(v14, v24);
      if ((d * d) % v14 != 0) continue;
      int64_t dp = d * d / v14; // d'
      // v23 = -v24^2 / v14 is integral once v14 | d^2.
      assert((v24 * v24) % v14 == 0);
      for (int64_t v34 = 0; v34 < v14; ++v34) {
        if (std::gcd(dp, v34) != 1) continue;
        if (!emit(sink, Weyl::ba,
                  make_p({0, 0, -v24 / d, v14 / d},
                         {0, -v24, v14, -(v24 * v24) / v14, v24, v34}),
                  {{"d", Int(d)}, {"d_prime", Int(dp)}}))
          return false;
      }
    }
  return true;
}

bool enum_aba(int64_t bound, const std::function<bool(const CosetRep&)>& sink) {
  for (int64_t v1 = 1; v1 <= bound; ++v1)
    for (int64_t v2 = 0; v2 < v1; ++v2) {
      int64_t d = std::gcd(v1, v2);
      int64_t vp1 = v1 / d, vp2 = v2 / d;
      for (int64_t v3 = 0; v3 < v1; ++v3)
        for (int64_t v4 = 0; v4 < v1; ++v4) {
          if (std::gcd(d, std::gcd(v3, v4)) != 1) continue;
          int64_t delta = std::gcd(d, vp1 * v3 + vp2 * v4);
          int64_t dd = d * delta;
          assert((v1 * v2) % dd == 0 && (v1 * v1) % dd == 0 && (v2 * v2) % dd == 0);
          if (!emit(sink, Weyl::aba,
                    make_p({v1, v2, v3, v4},
                           {0, -(v1 * v2) / dd, (v1 * v1) / dd, -(v2 * v2) / dd,
                            (v1 * v2) / dd, (v1 * v3 + v2 * v4) / dd}),
                    {{"d", Int(d)}, {"delta", Int(delta)}}))
            return false;
        }
    }
  return true;
}

bool enum_bab(int64_t bound, const std::function<bool(const CosetRep&)>& sink) {
  for (int64_t v12 = 1; v12 <= bound; ++v12)
    for (int64_t v13 = 0; v13 < v12; ++v13)
      for (int64_t v14 = 0; v14 < v12; ++v14) {
        int64_t d1 = std::gcd(v12, v14);
        if ((v13 * v13) % d1 != 0) continue;
        int64_t k = v13 * v13 / d1;
        int64_t vp12 = v12 / d1, vp14 = v14 / d1;
        int64_t d0 = std::gcd(d1, v13);
        int64_t dq = d1 / d0;
        int64_t t = std::gcd(k, d1);
        assert(d0 % dq == 0 && t == d0 / dq);
        // Particular solution a of a * v'14 == -k (mod v'12) with t | a and
        // t | (a v'14 + k) / v'12, built by the two-step shift.
        int64_t inv = vp12 == 1 ? 0 : mod_inverse(mod_floor(vp14, vp12), vp12);
        int64_t a_arb = mod_floor(-k % vp12 * inv, vp12);
        assert((a_arb + k * inv) % vp12 == 0);
        int64_t u = (a_arb + k * inv) / vp12;
        int64_t a = a_arb - u * vp12;
        assert(a % t == 0);
        int64_t f = std::gcd(t, vp12);
        int64_t u2 = (a + k * inv) / vp12;
        assert(u2 % (t / f) == 0);
        int64_t n = mod_floor(-(u2 / (t / f)), f);
        a += n * (t / f) * vp12;
        assert(a % t == 0 && (a * vp14 + k) % vp12 == 0 && ((a * vp14 + k) / vp12) % t == 0);

        std::vector<int64_t> v23s;
        for (int64_t r = 0; r < d1; ++r) {
          if (std::gcd(r, t) != 1) continue;
          v23s.push_back(mod_floor(a + r * vp12, v12));
        }
        std::sort(v23s.begin(), v23s.end());
        for (int64_t v23 : v23s) {
          assert((v13 * v13 + v14 * v23) % v12 == 0);
          int64_t v34 = -(v13 * v13 + v14 * v23) / v12;
          PlueckerVec p = make_p({0, v12 / d0, v13 / d0, v14 / d0},
                                 {v12, v13, v14, v23, -v13, v34});
          // (r, t) = 1 is equivalent to the secondary gcd condition; emit()
          // asserts it, so a parameterization bug fails loudly.
          if (!emit(sink, Weyl::bab, std::move(p),
                    {{"d0", Int(d0)}, {"d1", Int(d1)}, {"t", Int(t)}, {"a", Int(a)}}))
            return false;
        }
      }
  return true;
}

bool long_inner(int64_t v1, int64_t v12, const std::function<bool(const CosetRep&)>& sink) {
  for (int64_t v2 = 0; v2 < v1; ++v2)
    for (int64_t v3 = 0; v3 < v1; ++v3)
      for (int64_t v4 = 0; v4 < v1; ++v4) {
        if (std::gcd(std::gcd(v1, v2), std::gcd(v3, v4)) != 1) continue;
        for (int64_t v13r = 0; v13r < v12; ++v13r)
          for (int64_t v14 = 0; v14 < v12; ++v14) {
            int64_t e = v1 * v13r + v2 * v14 - v4 * v12;
            if (e % (v1 * v12) != 0) continue;
            // Canonical lift making the linear relation exact.
            int64_t v13 = v13r - (e / (v1 * v12)) * v12;
            assert(v1 * v13 + v2 * v14 - v4 * v12 == 0);
            if ((v2 * v13 - v3 * v12) % v1 != 0) continue;
            if ((v3 * v14 - v4 * v13) % v1 != 0) continue;
            int64_t v23 = (v2 * v13 - v3 * v12) / v1;
            int64_t v34 = (v3 * v14 - v4 * v13) / v1;
            PlueckerVec p = make_p({v1, v2, v3, v4}, {v12, v13, v14, v23, -v13, v34});
            if (p.gcd_secondary() != 1) continue;
            if (!emit(sink, Weyl::abab, std::move(p))) return false;
          }
      }
  return true;
}

bool enum_abab(int64_t bound, const std::function<bool(const CosetRep&)>& sink) {
  for (int64_t v1 = 1; v1 <= bound; ++v1)
    for (int64_t v12 = 1; v12 <= bound; ++v12)
      if (!long_inner(v1, v12, sink)) return false;
  return true;
}

} // namespace

void enumerate_r(Weyl cell, int64_t bound, const std::function<bool(const CosetRep&)>& sink) {
  if (bound > 2'000'000)
    throw budget_exceeded("enumerate_r: bound too large for int64 coordinate arithmetic");
  switch (cell) {
    case Weyl::id: enum_id(bound, sink); return;
    case Weyl::a: enum_a(bound, sink); return;
    case Weyl::b: enum_b(bound, sink); return;
    case Weyl::ab: enum_ab(bound, sink); return;
    case Weyl::ba: enum_ba(bound, sink); return;
    case Weyl::aba: enum_aba(bound, sink); return;
    case Weyl::bab: enum_bab(bound, sink); return;
    case Weyl::abab: enum_abab(bound, sink); return;
  }
}

std::vector<CosetRep> enumerate_r(Weyl cell, int64_t bound) {
  std::vector<CosetRep> out;
  enumerate_r(cell, bound, [&](const CosetRep& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

Int coset_modulus(const CosetRep& r) {
  switch (r.cell) {
    case Weyl::id: return 1;
    case Weyl::a: return r.p.v4();
    case Weyl::b: return r.p.v23();
    case Weyl::ab: return r.p.v2();
    case Weyl::ba: return r.p.v14();
    case Weyl::aba: return r.p.v1();
    case Weyl::bab: return r.p.v12();
    case Weyl::abab: return std::max(r.p.v1(), r.p.v12());
  }
  return 1;
}

Weyl bruhat_cell(const PlueckerVec& p) {
  if (p.v1() != 0) return p.v12() != 0 ? Weyl::abab : Weyl::aba;
  if (p.v2() != 0) return p.v12() != 0 ? Weyl::bab : Weyl::ab;
  if (p.v4() != 0) return p.v14() != 0 ? Weyl::ba : Weyl::a;
  return p.v23() != 0 ? Weyl::b : Weyl::id;
}

std::int64_t count_long_cell(int64_t v1, int64_t v12) {
  int64_t n = 0;
  long_inner(v1, v12, [&](const CosetRep&) {
    ++n;
    return true;
  });
  return n;
}

} // namespace sp4
