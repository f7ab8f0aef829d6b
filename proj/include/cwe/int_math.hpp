#pragma once

#include <cstdint>
#include <string>

#include "cwe/error.hpp"

namespace cwe {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "64-bit overflow in exact arithmetic");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "64-bit overflow in exact arithmetic");
  return out;
}

inline std::int64_t ipow(std::int64_t base, std::uint32_t e) {
  std::int64_t acc = 1;
  for (std::uint32_t i = 0; i < e; ++i) acc = checked_mul(acc, base);
  return acc;
}

/// a / b, throwing Internal if b does not divide a.
inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (b == 0 || a % b != 0)
    throw Error(ErrorCode::Internal, "non-integral quotient " + std::to_string(a) + " / " + std::to_string(b));
  return a / b;
}

/// (-1)^(num/4) for num divisible by 4.
inline int sign_quarter_power(std::int64_t num) {
  if (num % 4 != 0)
    throw Error(ErrorCode::Internal, "sign exponent " + std::to_string(num) + "/4 is not an integer");
  return (num / 4) % 2 == 0 ? 1 : -1;
}

}  // namespace cwe
