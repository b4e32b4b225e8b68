#pragma once

#include "btspin/errors.hpp"

namespace btspin {

// Exact 64-bit arithmetic: overflow raises ResourceError instead of wrapping.

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw ResourceError("integer overflow in exact arithmetic");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw ResourceError("integer overflow in exact arithmetic");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ResourceError("integer overflow in exact arithmetic");
  return r;
}

}  // namespace btspin
