#include "sp4/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sp4 {

namespace {

// Gauss-Kronrod 7/15 nodes and weights (positive half; symmetric rule).
constexpr double kKX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
constexpr double kKW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
// Embedded 7-point Gauss rule: nodes kKX[1], kKX[3], kKX[5] and the center.
constexpr double kGW[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct PanelEstimate {
  double kronrod;
  double err;
};

PanelEstimate gk15(const RealFn& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kKX[i]);
    fv[14 - i] = f(c + h * kKX[i]);
  }
  fv[7] = f(c);
  double k = 0.0;
  for (int i = 0; i < 7; ++i) k += kKW[i] * (fv[i] + fv[14 - i]);
  k += kKW[7] * fv[7];
  k *= h;
  double g = kGW[3] * fv[7];
  for (int i = 0; i < 3; ++i) g += kGW[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  g *= h;
  return {k, std::fabs(k - g)};
}

double adaptive(const RealFn& f, double a, double b, double tol, int depth) {
  PanelEstimate e = gk15(f, a, b);
  if (e.err <= tol || depth <= 0) return e.kronrod;
  double c = 0.5 * (a + b);
  return adaptive(f, a, c, 0.5 * tol, depth - 1) + adaptive(f, c, b, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const RealFn& f, double a, double b, double tol, int max_depth) {
  if (!(a < b)) return a == b ? 0.0 : -integrate(f, b, a, tol, max_depth);
  return adaptive(f, a, b, tol, max_depth);
}

double integrate_0_inf(const RealFn& f, double tol) {
  // u = tan(theta); the Gauss-Kronrod nodes are interior, so the endpoint
  // theta = pi/2 is never evaluated.
  auto mapped = [&f](double th) {
    double c = std::cos(th);
    double u = std::tan(th);
    double v = f(u);
    return v / (c * c);
  };
  return integrate(mapped, 0.0, 0.5 * std::numbers::pi, tol);
}

double integrate_oscillatory(const RealFn& g, double freq, double tol) {
  if (freq == 0.0) return integrate_0_inf(g, tol);
  // Half-period panels: for an eventually monotone envelope the panel sums
  // alternate in sign. Fast-decaying envelopes terminate on two consecutive
  // quiet panels; slowly decaying ones (a polynomial envelope can need
  // thousands of panels for the raw sum) are finished by Euler summation:
  // iterated averaging of the partial sums, which converges once the panel
  // sums alternate with smoothly varying magnitude.
  double half = 0.5 / std::fabs(freq);
  std::vector<double> partial;
  double acc = 0.0;
  int quiet = 0;
  int stable = 0;
  double prev_est = 0.0;
  bool have_prev = false;
  const int max_panels = 100000;
  for (int k = 0; k < max_panels; ++k) {
    double a = k * half, b = (k + 1) * half;
    double s = integrate(g, a, b, tol / 8.0);
    acc += s;
    partial.push_back(acc);
    if (k > 0 && std::fabs(s) < tol / 4.0) {
      if (++quiet >= 2) return acc;
    } else {
      quiet = 0;
    }
    if (k >= 15) {
      int len = static_cast<int>(std::min<std::size_t>(16, partial.size()));
      std::vector<double> t(partial.end() - len, partial.end());
      for (int lev = 1; lev < len; ++lev)
        for (int i = 0; i + lev < len; ++i) t[i] = 0.5 * (t[i] + t[i + 1]);
      double est = t[0];
      if (have_prev && std::fabs(est - prev_est) < tol / 4.0) {
        if (++stable >= 2) return est;
      } else {
        stable = 0;
      }
      prev_est = est;
      have_prev = true;
    }
  }
  throw std::runtime_error("integrate_oscillatory: tail did not settle");
}

double integrate_cosine(const RealFn& f, double t, double tol) {
  if (t == 0.0) return integrate_0_inf(f, tol);
  auto g = [&](double u) { return f(u) * std::cos(2.0 * std::numbers::pi * t * u); };
  return integrate_oscillatory(g, t, tol);
}

double integrate_sine(const RealFn& f, double t, double tol) {
  if (t == 0.0) return 0.0;
  auto g = [&](double u) { return f(u) * std::sin(2.0 * std::numbers::pi * t * u); };
  return integrate_oscillatory(g, t, tol);
}

const GaussLegendre& gauss_legendre(int n) {
  static std::map<int, GaussLegendre> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::domain_error("gauss_legendre: order must be positive");
  GaussLegendre gl;
  gl.x.resize(n);
  gl.w.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev-like initial guess, on [-1, 1].
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    // Map from [-1, 1] to [0, 1].
    gl.x[i] = 0.5 * (1.0 - x);  // reversed order is irrelevant to sums
    gl.w[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(gl)).first->second;
}

} // namespace sp4
