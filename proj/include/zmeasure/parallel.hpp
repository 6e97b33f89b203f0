#pragma once

// Small OpenMP helpers. Every parallel loop writes into a preallocated slot per
// item and reductions are done serially afterwards, so results are bitwise
// independent of the thread count.

#include <cmath>
#include <cstddef>
#include <vector>

#include <omp.h>

namespace zmeasure::parallel {

inline int max_threads() { return omp_get_max_threads(); }

template <typename T, typename Fn>
std::vector<T> map_indexed(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  }
  return out;
}

template <typename T, typename Fn>
std::vector<T> map_indexed_serial(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

// Neumaier-compensated sum; used for the serial reduction step.
inline double stable_sum(const std::vector<double>& values) {
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace zmeasure::parallel
