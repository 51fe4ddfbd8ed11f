#include "sp4/ramanujan.hpp"

#include "sp4/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace sp4 {

namespace {

using std::int64_t;

int64_t ipow_i64(int64_t p, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<int64_t>::max() / p)
      throw std::overflow_error("ramanujan: power exceeds int64 range");
    r *= p;
  }
  return r;
}

void check_local_input(int64_t p, int w1, int w12, int w2, int w14) {
  if (p < 2) throw std::invalid_argument("local count: p must be >= 2");
  if (w1 < 0 || w12 < 0 || w2 < 0 || w14 < 0 || w2 > w1 || w14 > w12)
    throw std::invalid_argument(
        "local count: need 0 <= w2 <= w1 and 0 <= w14 <= w12");
}

} // namespace

cx R_bruteforce(int64_t v1, int64_t v12, int64_t n1, int64_t n2,
                double budget) {
  if (v1 < 1 || v12 < 1)
    throw std::invalid_argument("R_bruteforce: moduli must be positive");
  if (static_cast<double>(v1) * v1 * v1 * v12 > budget)
    throw budget_exceeded("R_bruteforce: residue enumeration over budget");
  const int64_t m1 = mod_floor(n1, v1), m2 = mod_floor(n2, v12);
  cx acc = 0.0;
  for (int64_t v2 = 0; v2 < v1; ++v2)
    for (int64_t v4 = 0; v4 < v1; ++v4)
      for (int64_t v14 = 0; v14 < v12; ++v14) {
        // The linear relation v1 v13 + v2 v14 - v4 v12 = 0 read mod v1*v12
        // pins v13 to at most one residue class mod v12; its canonical lift
        // (the exact rational solution) is what the dependent coordinates
        // are computed from.
        const int64_t t = v4 * v12 - v2 * v14;
        if (t % v1 != 0) continue;
        const int64_t v13 = t / v1;
        const cx phase =
            unit_phase(static_cast<double>(m1 * v2 % v1) / v1 +
                       static_cast<double>(m2 * v14 % v12) / v12);
        for (int64_t v3 = 0; v3 < v1; ++v3) {
          if (std::gcd(std::gcd(v1, v2), std::gcd(v3, v4)) != 1) continue;
          const int64_t a = v2 * v13 - v3 * v12;
          if (a % v1 != 0) continue;
          const int64_t b = v3 * v14 - v4 * v13;
          if (b % v1 != 0) continue;
          const int64_t v23 = a / v1, v34 = b / v1;
          if (std::gcd(std::gcd(v12, v13), std::gcd(v14, std::gcd(v23, v34))) != 1)
            continue;
          acc += phase;
        }
      }
  return acc;
}

cx r_sum(int64_t v1, int64_t v12, int64_t n1, int64_t n2, double budget) {
  if (v1 < 1 || v12 < 1)
    throw std::invalid_argument("r_sum: moduli must be positive");
  cx acc = 0.0;
  for (int64_t u1 = 1; u1 <= v1; ++u1) {
    if (v1 % u1 != 0) continue;
    for (int64_t u12 = 1; u12 <= v12; ++u12) {
      if (v12 % u12 != 0) continue;
      acc += R_bruteforce(u1, u12, n1, n2, budget);
    }
  }
  return acc;
}

int64_t local_count_bruteforce(int64_t p, int w1, int w12, int w2, int w14) {
  check_local_input(p, w1, w12, w2, w14);
  const int64_t v1 = ipow_i64(p, w1), v12 = ipow_i64(p, w12);
  const int64_t v2 = ipow_i64(p, w2), v14 = ipow_i64(p, w14);
  int64_t count = 0;
  for (int64_t v4 = 0; v4 < v1; ++v4) {
    const int64_t t = v4 * v12 - v2 * v14;
    if (t % v1 != 0) continue;
    const int64_t v13 = t / v1; // canonical lift, relation exact
    for (int64_t v3 = 0; v3 < v1; ++v3) {
      if ((v2 * v13 - v3 * v12) % v1 != 0) continue;
      if ((v3 * v14 - v4 * v13) % v1 != 0) continue;
      ++count;
    }
  }
  return count;
}

int64_t local_count_closed(int64_t p, int w1, int w12, int w2, int w14) {
  check_local_input(p, w1, w12, w2, w14);
  if (w2 + w14 < std::min(w1, w12)) return 0;
  const int d = std::min(w1, w14);
  auto P = [&](int e) { return ipow_i64(p, e); };
  if (w1 <= w12) {
    if (2 * w1 - 2 * w2 > w14) return w12 > w2 + w14 ? 0 : P(w2 + w14);
    const int t = d + w1 + w12 - 2 * w2 - 2 * w14;
    if (2 * w1 - w2 - w12 >= 0) {
      if (t >= 1) return 2 * P(w2 + w14);
      if (t >= -1) return P(w1 + w12 - w2 - w14 + d);
      return P((w1 + w12 + d) / 2);
    }
    if (t >= 1) {
      if (w2 + w14 >= w12) return 2 * P(w2 + w14);
      // Pair-valued display reconciled against the enumeration: the smaller
      // exponent wins (the two entries are a gcd).
      return P(std::min(w2 + w14, w1 + d));
    }
    if (t >= -1) {
      if (w2 + w14 >= w12) return P(w1 + w12 - w2 - w14 + d);
      return P(w1 + d);
    }
    if (w2 + w14 > w12) return P(std::min((w1 + w12 + d) / 2, w1 + d));
    if (w2 + w14 == w12) return P(w1 + w12 - w2 - w14 + d);
    return P(w1 + d);
  }
  if (w12 >= w2 && w14 <= 2 * w12 - 2 * w2) return P(w2 + w14);
  return P(w12 + w14 / 2);
}

namespace {

// Sum of e(v p^{e-w}) over v mod p^w with ord_p(v) = wp, where v = 0 is the
// wp = w class. Closed form of the inner character sums of r_local.
double ord_char_sum(int64_t p, int w, int wp, int e) {
  if (wp == w) return 1.0;
  const double tail = std::pow(static_cast<double>(p), w - wp - 1);
  if (wp >= w - e) return tail * static_cast<double>(p - 1);
  if (wp == w - e - 1) return -tail;
  return 0.0;
}

} // namespace

double r_local(int64_t p, int w1, int w12, int e1, int e2) {
  if (p < 2 || w1 < 0 || w12 < 0 || e1 < 0 || e2 < 0)
    throw std::invalid_argument("r_local: bad arguments");
  double sum = 0.0;
  for (int w2 = 0; w2 <= w1; ++w2) {
    const double g1 = ord_char_sum(p, w1, w2, e1);
    if (g1 == 0.0) continue;
    for (int w14 = 0; w14 <= w12; ++w14) {
      const double g2 = ord_char_sum(p, w12, w14, e2);
      if (g2 == 0.0) continue;
      sum += static_cast<double>(local_count_closed(p, w1, w12, w2, w14)) *
             g1 * g2;
    }
  }
  return sum;
}

namespace {

// Laurent polynomials in two variables with integer coefficients, keyed by
// the exponent pair. Used for the exact character expansion.
using Lpoly = std::map<std::pair<int, int>, int64_t>;

void add_term(Lpoly& f, int a, int b, int64_t c) {
  const auto it = f.emplace(std::make_pair(a, b), 0).first;
  it->second += c;
  if (it->second == 0) f.erase(it);
}

// det [[x1^k - x1^-k, x2^k - x2^-k], [x1^l - x1^-l, x2^l - x2^-l]]
Lpoly antisym(int k, int l) {
  Lpoly f;
  for (const int s1 : {1, -1})
    for (const int s2 : {1, -1}) {
      const int sign = s1 * s2;
      add_term(f, s1 * k, s2 * l, sign);
      add_term(f, s1 * l, s2 * k, -sign);
    }
  return f;
}

// Exact division in the Laurent ring: valid because num is a multiple of
// den (Weyl character formula), so cancelling lexicographic leading terms
// terminates with zero remainder.
Lpoly divide_exact(Lpoly num, const Lpoly& den) {
  const auto lead = *den.rbegin();
  Lpoly q;
  long steps = 0;
  while (!num.empty()) {
    if (++steps > 2'000'000)
      throw std::logic_error("schur expansion: division did not terminate");
    const auto [mono, coef] = *num.rbegin();
    if (coef % lead.second != 0)
      throw std::logic_error("schur expansion: non-integral quotient");
    const int qa = mono.first - lead.first.first;
    const int qb = mono.second - lead.first.second;
    const int64_t qc = coef / lead.second;
    add_term(q, qa, qb, qc);
    for (const auto& [dm, dc] : den)
      add_term(num, dm.first + qa, dm.second + qb, -dc * qc);
  }
  return q;
}

const Lpoly& schur_poly(int l1, int l2) {
  static std::map<std::pair<int, int>, Lpoly> cache;
  static std::mutex mu;
  const std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(l1, l2);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, divide_exact(antisym(l1 + 2, l2 + 1), antisym(2, 1)))
             .first;
  return it->second;
}

cx ipow_cx(cx x, int n) {
  if (n < 0) return 1.0 / ipow_cx(x, -n);
  cx r = 1.0;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

void check_schur_args(int l1, int l2, cx x1, cx x2) {
  if (l2 < 0 || l1 < l2)
    throw std::invalid_argument("symplectic_schur: need l1 >= l2 >= 0");
  if (x1 == cx(0.0) || x2 == cx(0.0))
    throw std::invalid_argument("symplectic_schur: x1, x2 must be nonzero");
}

} // namespace

cx symplectic_schur(int l1, int l2, cx x1, cx x2) {
  check_schur_args(l1, l2, x1, x2);
  cx acc = 0.0;
  for (const auto& [mono, coef] : schur_poly(l1, l2))
    acc += static_cast<double>(coef) * ipow_cx(x1, mono.first) *
           ipow_cx(x2, mono.second);
  return acc;
}

cx symplectic_schur_ratio(int l1, int l2, cx x1, cx x2) {
  check_schur_args(l1, l2, x1, x2);
  auto row = [](cx x, int k) { return ipow_cx(x, k) - ipow_cx(x, -k); };
  const cx num =
      row(x1, l1 + 2) * row(x2, l2 + 1) - row(x2, l1 + 2) * row(x1, l2 + 1);
  const cx den = row(x1, 2) * row(x2, 1) - row(x2, 2) * row(x1, 1);
  if (den == cx(0.0))
    throw std::domain_error("symplectic_schur_ratio: singular denominator");
  return num / den;
}

double sigma_pair(double s1, double s2, int64_t n1, int64_t n2) {
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("sigma_pair: n1, n2 must be >= 1");
  double prod = 1.0;
  auto absorb = [&](int64_t p) {
    int e1 = 0, e2 = 0;
    while (n1 % p == 0) { n1 /= p; ++e1; }
    while (n2 % p == 0) { n2 /= p; ++e2; }
    const double pd = static_cast<double>(p);
    const double sp =
        symplectic_schur(e1 + e2, e1, cx(std::pow(pd, s1)), cx(std::pow(pd, s2)))
            .real();
    prod *= std::pow(pd, (e1 + e2) * s1 + e1 * s2) * sp;
  };
  int64_t m = n1 * n2;
  for (int64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      absorb(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) absorb(m);
  return prod;
}

double dirichlet_closed(double nu1, double nu2, int64_t n1, int64_t n2,
                        double pole_eps) {
  auto z = [&](double s) {
    if (std::fabs(s - 1.0) < pole_eps)
      throw std::domain_error(
          "dirichlet_closed: zeta argument within pole_eps of the pole");
    return zeta(s);
  };
  const double denom =
      z(nu1) * z(nu2) * z(nu1 + nu2 - 1.0) * z(nu1 + 2.0 * nu2 - 2.0);
  const int64_t a1 = std::abs(n1), a2 = std::abs(n2);
  if (a1 != 0 && a2 != 0)
    return sigma_pair(1.5 - 0.5 * nu1 - nu2, 0.5 - 0.5 * nu1, a1, a2) / denom;
  if (a1 != 0)
    return divisor_sigma(1.0 - nu1, a1) * z(nu2 - 1.0) * z(nu1 + nu2 - 2.0) *
           z(nu1 + 2.0 * nu2 - 3.0) / denom;
  if (a2 != 0)
    return divisor_sigma(1.0 - nu2, a2) * z(nu1 - 1.0) * z(nu1 + nu2 - 2.0) *
           z(nu1 + 2.0 * nu2 - 3.0) / denom;
  return z(nu1 - 1.0) * z(nu2 - 1.0) * z(nu1 + nu2 - 2.0) *
         z(nu1 + 2.0 * nu2 - 3.0) / denom;
}

cx dirichlet_truncated(double nu1, double nu2, int64_t n1, int64_t n2,
                       int64_t N, double budget) {
  if (N < 1) throw std::invalid_argument("dirichlet_truncated: N must be >= 1");
  double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
  auto kahan = [](double& s, double& c, double x) {
    const double y = x - c, t = s + y;
    c = (t - s) - y;
    s = t;
  };
  for (int64_t v1 = 1; v1 <= N; ++v1)
    for (int64_t v12 = 1; v12 <= N; ++v12) {
      const cx term = std::pow(static_cast<double>(v1), -nu1) *
                      std::pow(static_cast<double>(v12), -nu2) *
                      R_bruteforce(v1, v12, n1, n2, budget);
      kahan(sr, cr, term.real());
      kahan(si, ci, term.imag());
    }
  return {sr, si};
}

} // namespace sp4
