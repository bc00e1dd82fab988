#pragma once

// Thin OpenMP shim. Every parallel kernel in the library has a serial
// reference twin; both must produce identical reports for any worker count.

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace hypcolor {

/// Which implementation a kernel should use.
enum class Exec { Serial, Parallel };

inline int max_workers() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_workers(int n) {
#if defined(_OPENMP)
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

inline int worker_id() {
#if defined(_OPENMP)
  return omp_get_thread_num();
#else
  return 0;
#endif
}

}  // namespace hypcolor
