#pragma once

// Small wrapper so code can ask about OpenMP without ifdef noise.

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncposet {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace ncposet
