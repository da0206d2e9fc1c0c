#ifndef ALCOMB_CHECKED_HPP
#define ALCOMB_CHECKED_HPP

#include <cstdint>
#include <stdexcept>

namespace alcomb {

using Int = std::int64_t;

// All weight arithmetic goes through these: overflow is a hard error,
// never wraparound.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in weight arithmetic");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in weight arithmetic");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in weight arithmetic");
  return r;
}

// Floor division, b > 0. C++ '/' truncates toward zero.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Representative in [0, b).
inline Int floor_mod(Int a, Int b) {
  Int r = a % b;
  if (r < 0) r += b;
  return r;
}

}  // namespace alcomb

#endif
