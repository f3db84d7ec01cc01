#include "gravbounds/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gravbounds {

int max_threads() {
#ifdef _OPENMP
  static const int cap = [] {
    if (const char* env = std::getenv("GRAVBOUNDS_THREADS")) {
      try {
        const int v = std::stoi(env);
        if (v > 0) return v;
      } catch (...) {
      }
    }
    return 0;  // auto
  }();
  const int def = omp_get_max_threads();
  if (cap > 0 && cap < def) return cap;
  return def > 0 ? def : 1;
#else
  return 1;
#endif
}

}  // namespace gravbounds
