#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gravbounds {

/// Thread budget for parallel kernels: GRAVBOUNDS_THREADS caps the OpenMP
/// default; 0 or unset means "use the OpenMP default". Always >= 1.
int max_threads();

/// Run body(i) for i in [0, n). Iterations must be independent; each writes
/// only its own output slot, so results are identical for any thread count.
template <class Body>
void parallel_for(std::ptrdiff_t n, const Body& body) {
#ifdef _OPENMP
  const int nt = max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
#else
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
#endif
}

namespace reference {

/// Serial twin of parallel_for, kept for tests and the kernel benchmark.
template <class Body>
void serial_for(std::ptrdiff_t n, const Body& body) {
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

}  // namespace reference
}  // namespace gravbounds
