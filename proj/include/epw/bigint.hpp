#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace epw {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

/// 2^e as a big integer.
inline BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

/// Number of bits needed to write x (0 for x == 0).
inline unsigned bit_length(const BigInt& x) {
  return x.is_zero() ? 0u : static_cast<unsigned>(boost::multiprecision::msb(x)) + 1u;
}

/// True iff n is one of 1, 2, 4, 8, ... (2^0 counts, 0 does not).
inline bool is_power_of_two(const BigInt& n) {
  if (n.sign() <= 0) return false;
  return boost::multiprecision::lsb(n) == boost::multiprecision::msb(n);
}

}  // namespace epw
