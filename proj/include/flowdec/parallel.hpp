#pragma once
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flowdec {

/// Resolves the worker count for parallel regions: an explicit request
/// wins, then the FLOWDEC_THREADS environment variable, then the OpenMP
/// default. Returns 1 when built without OpenMP.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FLOWDEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace flowdec
