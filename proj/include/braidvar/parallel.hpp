#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidvar/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidvar {

// Applies fn(i) for i in [0, n). With jobs > 1 the iterations fan out over
// OpenMP threads; results must be written by index so output order stays
// deterministic regardless of scheduling. jobs <= 1 is the serial reference
// path. All operations in this library are pure over immutable values, so
// tasks share no mutable state. Exceptions are captured per index and the
// first one is rethrown after the join.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
#ifdef _OPENMP
  if (jobs > 1 && n > 1) {
    std::vector<std::string> errors(n);
    std::vector<char> failed(n, 0);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (const std::exception& e) {
        failed[i] = 1;
        errors[i] = e.what();
      } catch (...) {
        failed[i] = 1;
        errors[i] = "unknown error";
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (failed[i]) throw Error(errors[i]);
    return;
  }
#endif
  (void)jobs;
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, int jobs, Fn&& fn) {
  std::vector<T> out(n);
  parallel_for(n, jobs, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

inline int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace braidvar
