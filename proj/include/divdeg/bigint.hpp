#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace divdeg {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }
inline std::string to_decimal(std::uint64_t v) { return std::to_string(v); }

/// Parses a non-negative decimal string. Returns nullopt on any stray character.
std::optional<BigInt> parse_decimal(std::string_view text);

inline std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

// Scalar helpers shared by the templated builders so that std::uint64_t and
// BigInt instantiate the same code.
template <class Int>
Int int_gcd(Int a, Int b) {
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <class Int>
Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return Int(0);
  return (a / int_gcd(a, b)) * b;
}

template <class Int>
Int int_pow(Int base, unsigned exponent) {
  Int result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

}  // namespace divdeg
