#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sp4 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using cx = std::complex<double>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// e(x) = exp(2*pi*i*x)
cx unit_phase(double x);

// Nonnegative gcd helpers. gcd(0,0) = 0.
std::int64_t gcd_i64(std::int64_t a, std::int64_t b);
Int gcd_int(Int a, Int b);

// x mod m normalized to [0, m), m > 0.
std::int64_t mod_floor(std::int64_t x, std::int64_t m);
Int mod_floor_int(const Int& x, const Int& m);

// Inverse of a mod m, gcd(a, m) = 1, result in [0, m). Throws otherwise.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sp4
