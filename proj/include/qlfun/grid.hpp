#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qlfun {

struct RunOptions {
  bool parallel = true;
};

// Runs f(i) for i in [0, n).  OpenMP path when available and requested,
// plain serial loop otherwise; the serial loop is the reference the
// parallel path is tested against.  f must write only to its own index
// slot and must not let exceptions escape.
template <class F>
void for_each_index(std::size_t n, bool parallel, F&& f) {
#ifdef _OPENMP
  if (parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      f(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qlfun
