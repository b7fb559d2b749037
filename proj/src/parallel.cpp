#include "surplab/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace surplab {

namespace {
std::atomic<std::size_t> g_workers{0};
}

void set_workers(std::size_t workers) { g_workers = workers; }

std::size_t workers() { return g_workers; }

std::size_t effective_workers() {
#ifdef _OPENMP
  const std::size_t w = g_workers;
  return w ? w : static_cast<std::size_t>(omp_get_max_threads());
#else
  return 1;
#endif
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

} // namespace surplab
