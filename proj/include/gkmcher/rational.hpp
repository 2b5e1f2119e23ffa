#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace gkmcher {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) {
  return q.get_str();
}

// Exact floor of a/b for b > 0.
inline long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace gkmcher
