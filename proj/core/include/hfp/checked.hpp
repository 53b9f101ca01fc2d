#pragma once

#include <cstdint>
#include <numeric>

#include "hfp/error.hpp"

// Overflow-checked int64 arithmetic. Every operation either returns the exact
// result or throws Error{IntegerOverflow}.
namespace hfp::checked {

using Int = std::int64_t;
__extension__ using Wide = __int128;

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::IntegerOverflow, "addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::IntegerOverflow, "subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::IntegerOverflow, "multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

inline Int narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(ErrorCode::IntegerOverflow, "narrowing");
  return static_cast<Int>(v);
}

// Floor division and the matching nonnegative remainder for b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace hfp::checked
