#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace wbr {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, std::uint64_t e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Canonical representative in [0, m).
inline BigInt mod_reduce(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline BigInt big_gcd(BigInt a, BigInt b) {
  return boost::multiprecision::gcd(a, b);
}

// Inverse of a mod m; requires gcd(a, m) == 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt r0 = m, r1 = mod_reduce(a, m), t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  return mod_reduce(t0, m);
}

inline std::string to_decimal(const BigInt& a) { return a.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

}  // namespace wbr
