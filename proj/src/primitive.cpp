#include "sp4/primitive.hpp"

#include "sp4/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>

namespace sp4 {

namespace {

std::int64_t gcd4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return std::gcd(std::gcd(std::llabs(a), std::llabs(b)),
                  std::gcd(std::llabs(c), std::llabs(d)));
}

// Integral basis of the plane {x : x wedge w = 0} for a decomposable w,
// Lagrange-reduced so short multiples cover a sup-norm ball with small
// coefficient ranges.
std::array<std::array<Int, 4>, 2> plane_basis(const std::array<std::int64_t, 6>& w) {
  const std::int64_t w12 = w[0], w13 = w[1], w14 = w[2], w23 = w[3], w24 = w[4],
                     w34 = w[5];
  ZMat a = {{Int(w23), Int(-w13), Int(w12), Int(0)},
            {Int(w24), Int(-w14), Int(0), Int(w12)},
            {Int(w34), Int(0), Int(-w14), Int(w13)},
            {Int(0), Int(w34), Int(-w24), Int(w23)}};
  ZMat kern = integer_kernel(a);
  assert(kern.size() == 2);
  std::array<std::array<Int, 4>, 2> b;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) b[i][j] = kern[i][j];

  auto dot = [](const std::array<Int, 4>& x, const std::array<Int, 4>& y) {
    Int s = 0;
    for (int i = 0; i < 4; ++i) s += x[i] * y[i];
    return s;
  };
  for (;;) {
    if (dot(b[0], b[0]) > dot(b[1], b[1])) std::swap(b[0], b[1]);
    Int n0 = dot(b[0], b[0]);
    Int d01 = dot(b[0], b[1]);
    Int q(std::llround(static_cast<double>(d01) / static_cast<double>(n0)));
    // Guard against rounding drift: |d01 - q*n0| must be minimal, with ties
    // broken toward q = 0 so the loop terminates (strict norm decrease).
    while (abs(d01 - (q + 1) * n0) < abs(d01 - q * n0)) ++q;
    while (abs(d01 - (q - 1) * n0) < abs(d01 - q * n0)) --q;
    if (q > 0 && abs(d01 - (q - 1) * n0) == abs(d01 - q * n0)) --q;
    if (q < 0 && abs(d01 - (q + 1) * n0) == abs(d01 - q * n0)) ++q;
    if (q == 0) break;
    for (int j = 0; j < 4; ++j) b[1][j] -= q * b[0][j];
  }
  return b;
}

} // namespace

void enumerate_va(std::int64_t bound,
                  const std::function<bool(const std::array<Int, 6>&)>& sink) {
  auto emit = [&](std::int64_t w12, std::int64_t w13, std::int64_t w14,
                  std::int64_t w23, std::int64_t w34) {
    if (std::gcd(gcd4(w12, w13, w14, w23), std::gcd(std::llabs(w13), std::llabs(w34))) != 1)
      return true;
    return sink({Int(w12), Int(w13), Int(w14), Int(w23), Int(-w13), Int(w34)});
  };
  for (std::int64_t w12 = -bound; w12 <= bound; ++w12)
    for (std::int64_t w13 = -bound; w13 <= bound; ++w13)
      for (std::int64_t w14 = -bound; w14 <= bound; ++w14)
        for (std::int64_t w23 = -bound; w23 <= bound; ++w23) {
          std::int64_t q = w13 * w13 + w14 * w23;
          if (w12 != 0) {
            if (q % w12 != 0) continue;
            std::int64_t w34 = -q / w12;
            if (std::llabs(w34) > bound) continue;
            if (!emit(w12, w13, w14, w23, w34)) return;
          } else {
            if (q != 0) continue;
            for (std::int64_t w34 = -bound; w34 <= bound; ++w34)
              if (!emit(w12, w13, w14, w23, w34)) return;
          }
        }
}

std::vector<std::array<Int, 6>> enumerate_va(std::int64_t bound) {
  std::vector<std::array<Int, 6>> out;
  enumerate_va(bound, [&](const std::array<Int, 6>& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

void enumerate_vb(std::int64_t bound,
                  const std::function<bool(const std::array<Int, 4>&)>& sink) {
  for (std::int64_t v1 = -bound; v1 <= bound; ++v1)
    for (std::int64_t v2 = -bound; v2 <= bound; ++v2)
      for (std::int64_t v3 = -bound; v3 <= bound; ++v3)
        for (std::int64_t v4 = -bound; v4 <= bound; ++v4) {
          if (gcd4(v1, v2, v3, v4) != 1) continue;
          if (!sink({Int(v1), Int(v2), Int(v3), Int(v4)})) return;
        }
}

std::vector<std::array<Int, 4>> enumerate_vb(std::int64_t bound) {
  std::vector<std::array<Int, 4>> out;
  enumerate_vb(bound, [&](const std::array<Int, 4>& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

void enumerate_v0(std::int64_t bound, const std::function<bool(const PlueckerVec&)>& sink) {
  std::vector<PlueckerVec> points;
  enumerate_va(bound, [&](const std::array<Int, 6>& wraw) {
    std::array<std::int64_t, 6> w;
    for (int i = 0; i < 6; ++i) w[i] = static_cast<std::int64_t>(wraw[i]);
    auto b = plane_basis(w);
    double n0 = 0, n1 = 0;
    for (int j = 0; j < 4; ++j) {
      n0 += static_cast<double>(b[0][j]) * static_cast<double>(b[0][j]);
      n1 += static_cast<double>(b[1][j]) * static_cast<double>(b[1][j]);
    }
    // For a reduced basis, |s| <= sqrt(2)*|v|_2/|b0|_2 over all lattice
    // vectors v = s*b0 + t*b1; the sup-norm ball has |v|_2 <= 2*bound.
    auto smax = static_cast<std::int64_t>(2.0 * std::numbers::sqrt2 * bound / std::sqrt(n0)) + 2;
    auto tmax = static_cast<std::int64_t>(2.0 * std::numbers::sqrt2 * bound / std::sqrt(n1)) + 2;
    for (std::int64_t s = -smax; s <= smax; ++s)
      for (std::int64_t t = -tmax; t <= tmax; ++t) {
        if (s == 0 && t == 0) continue;
        std::array<Int, 4> v;
        bool in_box = true;
        for (int j = 0; j < 4; ++j) {
          v[j] = s * b[0][j] + t * b[1][j];
          if (abs(v[j]) > bound) in_box = false;
        }
        if (!in_box) continue;
        PlueckerVec p;
        p.v = v;
        p.w = wraw;
        if (p.gcd_primary() != 1) continue;
        assert(p.all_ok());
        points.push_back(p);
      }
    return true;
  });
  std::sort(points.begin(), points.end(), [](const PlueckerVec& x, const PlueckerVec& y) {
    for (int i = 0; i < 4; ++i)
      if (x.v[i] != y.v[i]) return x.v[i] < y.v[i];
    for (int i = 0; i < 6; ++i)
      if (x.w[i] != y.w[i]) return x.w[i] < y.w[i];
    return false;
  });
  for (const PlueckerVec& p : points)
    if (!sink(p)) return;
}

std::vector<PlueckerVec> enumerate_v0(std::int64_t bound) {
  std::vector<PlueckerVec> out;
  enumerate_v0(bound, [&](const PlueckerVec& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

} // namespace sp4
