#pragma once

// Execution policy shared by the data-parallel kernels. Every kernel has a
// plain loop (Exec::serial) kept as the reference and an OpenMP version whose
// output must match it exactly.

#include <algorithm>
#include <cstdint>

namespace concave {

enum class Exec { serial, parallel };

// max_{i<n} fn(i). max is exact, so the parallel reduction is bit-identical
// to the serial one.
template <typename Fn>
double max_over(Exec exec, std::int64_t n, Fn&& fn) {
  double worst = 0.0;
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < n; ++i) worst = std::max(worst, fn(i));
    return worst;
  }
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) worst = std::max(worst, fn(i));
  return worst;
}

}  // namespace concave
