#pragma once

// Every enumeration kernel in the library comes in two flavours: a plain
// serial loop kept as the reference, and an OpenMP version that shards the
// same index range and reduces in a fixed order. Tests compare the two.

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace infsym {

enum class Exec { serial, parallel };

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

}  // namespace infsym
