#pragma once

#include <cstdint>

#include "xmodkit/errors.hpp"

namespace xmodkit {

// All abelian-group arithmetic is exact; overflow throws instead of wrapping.

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline long long checked_pow(long long base, long long exp) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace xmodkit
