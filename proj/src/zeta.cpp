#include "sp4/zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sp4 {

namespace {

// Bernoulli numbers B_2, B_4, ..., B_20.
constexpr double kBernoulli[10] = {
    1.0 / 6,      -1.0 / 30,      1.0 / 42,       -1.0 / 30,      5.0 / 66,
    -691.0 / 2730, 7.0 / 6,       -3617.0 / 510,  43867.0 / 798,  -174611.0 / 330,
};

// Lanczos coefficients (g = 7, 9 terms).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Gamma on the half-plane x >= 0.5 via Lanczos.
double gamma_core(double x) {
  double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

} // namespace

double gamma_fn(double x) {
  if (x < 0.5) {
    // Reflection; poles at nonpositive integers.
    if (x == std::floor(x)) throw std::domain_error("gamma_fn: pole at nonpositive integer");
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_core(1.0 - x));
  }
  return gamma_core(x);
}

double log_gamma_abs(double x) {
  if (x >= 0.5) {
    double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
    double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(std::fabs(acc));
  }
  if (x == std::floor(x))
    throw std::domain_error("log_gamma_abs: pole at nonpositive integer");
  double s = std::sin(std::numbers::pi * x);
  return std::log(std::numbers::pi / std::fabs(s)) - log_gamma_abs(1.0 - x);
}

double zeta(double s) {
  if (s == 1.0) throw std::domain_error("zeta: pole at s = 1");
  // Functional equation for arguments far left, where Euler-Maclaurin with a
  // fixed correction order loses accuracy.
  if (s < -1.0) {
    double chi = std::pow(2.0, s) * std::pow(std::numbers::pi, s - 1.0) *
                 std::sin(std::numbers::pi * s / 2.0) * gamma_fn(1.0 - s);
    return chi * zeta(1.0 - s);
  }
  constexpr int N = 24;
  constexpr int K = 10;
  double acc = 0.0;
  for (int n = 1; n < N; ++n) acc += std::pow(n, -s);
  acc += std::pow(N, 1.0 - s) / (s - 1.0);
  acc += 0.5 * std::pow(N, -s);
  // Correction terms B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
  double poch = s;            // rising factorial with 2k-1 factors
  double fact = 2.0;          // (2k)!
  double npow = std::pow(N, -s - 1.0);
  for (int k = 1; k <= K; ++k) {
    acc += kBernoulli[k - 1] / fact * poch * npow;
    poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    npow /= double(N) * double(N);
  }
  return acc;
}

double lambda(double s) {
  return std::pow(std::numbers::pi, -s / 2.0) * gamma_fn(s / 2.0) * zeta(s);
}

double lambda_ratio(double a, double b) { return lambda(a) / lambda(b); }

double beta_fn(double x, double y) { return gamma_fn(x) * gamma_fn(y) / gamma_fn(x + y); }

double beta_half(double x) { return beta_fn(0.5, x); }

double divisor_sigma(double s, std::int64_t n) {
  if (n < 1) throw std::domain_error("divisor_sigma: n must be positive");
  double acc = 0.0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    acc += std::pow(double(d), s);
    std::int64_t q = n / d;
    if (q != d) acc += std::pow(double(q), s);
  }
  return acc;
}

} // namespace sp4
