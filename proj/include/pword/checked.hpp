#pragma once

#include <cstdint>
#include <stdexcept>

namespace pword {

// 64-bit arithmetic that reports overflow instead of wrapping. Every value
// this library computes goes through these helpers (or through 128-bit
// intermediates for comparisons, which cannot overflow for 64-bit operands).

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow: add");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow: sub");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow: mul");
  return r;
}

}  // namespace pword
