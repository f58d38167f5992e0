#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frechet3 {

/// Fills out[i] = f(i) for i in [0, n). The OpenMP kernel partitions the
/// index range; results are written by index, so the output is identical to
/// the serial reference regardless of thread count.
template <class F>
void map_indexed(std::size_t n, std::vector<double>& out, F&& f,
                 bool parallel = true) {
  out.resize(n);
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  }
}

/// Serial reference kept for testing the parallel kernel against.
template <class F>
void map_indexed_serial(std::size_t n, std::vector<double>& out, F&& f) {
  map_indexed(n, out, std::forward<F>(f), /*parallel=*/false);
}

/// Largest value together with the smallest index attaining it, so the
/// reduction is deterministic under any scan order.
struct WorstPoint {
  double value = -1e300;
  std::size_t index = 0;
};

inline WorstPoint worst_of(const std::vector<double>& values) {
  WorstPoint w;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > w.value) {
      w.value = values[i];
      w.index = i;
    }
  }
  return w;
}

}  // namespace frechet3
