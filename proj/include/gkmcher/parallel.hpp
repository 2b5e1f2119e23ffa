#pragma once

#include <cstddef>
#include <utility>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace gkmcher::par {

enum class Mode { serial, parallel };

inline bool have_openmp() {
#if defined(_OPENMP)
  return true;
#else
  return false;
#endif
}

// Runs fn(i) for i in [0, n). In parallel mode iterations are sharded across
// OpenMP threads; each iteration must write only to its own slot so the result
// is identical to the serial reference path.
template <class F>
void for_each(std::size_t n, Mode mode, F&& fn) {
  if (mode == Mode::parallel && have_openmp()) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
#endif
  } else {
    for (std::size_t i = 0; i < n; ++i) fn(i);
  }
}

}  // namespace gkmcher::par
