#pragma once

#include <cstdint>

#include "fano/error.hpp"

// Exact 64-bit arithmetic. Any overflow throws instead of wrapping.
namespace fano {

using Int = std::int64_t;

[[noreturn]] void throw_overflow(const char* op);

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

}  // namespace fano
