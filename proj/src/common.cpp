#include "sp4/common.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace sp4 {

cx unit_phase(double x) {
  double t = 2.0 * std::numbers::pi * x;
  return {std::cos(t), std::sin(t)};
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

Int gcd_int(Int a, Int b) {
  return boost::multiprecision::gcd(a, b);
}

std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

Int mod_floor_int(const Int& x, const Int& m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = mod_floor(a, m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: arguments not coprime");
  return mod_floor(t0, m);
}

} // namespace sp4
