#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace harmonium {

/// Execution mode for the data-parallel kernels. Every parallel kernel keeps
/// a serial reference path selectable at runtime so tests and the benchmark
/// can compare the two.
enum class Exec { serial, parallel };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace harmonium
