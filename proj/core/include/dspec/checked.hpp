#pragma once

#include <cstdint>
#include <string>

#include "dspec/errors.hpp"

namespace dspec::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiplication overflow");
  return r;
}

// numerator / denominator, throwing InexactDivision when it does not divide.
inline std::int64_t exact_div(std::int64_t numerator, std::int64_t denominator, const std::string& what) {
  if (denominator == 0 || numerator % denominator != 0) {
    throw InexactDivision(what + ": " + std::to_string(numerator) + " is not divisible by " +
                          std::to_string(denominator));
  }
  return numerator / denominator;
}

}  // namespace dspec::checked
