#pragma once

#include <cstdint>
#include <optional>

namespace miniverif::num {

// 64-bit integer arithmetic that reports overflow instead of wrapping.

inline std::optional<std::int64_t> checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<std::int64_t> checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<std::int64_t> checked_neg(std::int64_t a) {
  if (a == INT64_MIN) return std::nullopt;
  return -a;
}

/// Truncation-toward-zero division, the MiniC semantics. Divisor 0 and
/// INT64_MIN / -1 report failure.
inline std::optional<std::int64_t> checked_div(std::int64_t a, std::int64_t b) {
  if (b == 0) return std::nullopt;
  if (a == INT64_MIN && b == -1) return std::nullopt;
  return a / b;
}

inline std::optional<std::int64_t> checked_rem(std::int64_t a, std::int64_t b) {
  if (b == 0) return std::nullopt;
  if (a == INT64_MIN && b == -1) return std::nullopt;
  return a % b;
}

}  // namespace miniverif::num
