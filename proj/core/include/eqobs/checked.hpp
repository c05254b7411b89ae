#pragma once

#include <cstdint>

#include "eqobs/errors.hpp"

namespace eqobs {

/// Exact 64-bit arithmetic with overflow detection.
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

/// (-1)^k for a possibly negative exponent.
inline int64_t parity_sign(int64_t k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace eqobs
