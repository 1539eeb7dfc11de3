#pragma once

#include <cstdint>
#include <exception>
#include <utility>

namespace witbound {

/// Execution lane for the embarrassingly parallel loops (sweep grid points,
/// oracle restarts, property samples). Serial is the reference path; OpenMP
/// runs the same per-item code concurrently. Items must be independent, and
/// every caller here writes item i into slot i of a pre-sized buffer (or
/// max-reduces), so the two lanes produce bitwise identical results.
enum class ExecMode { Serial, OpenMP };

inline ExecMode default_exec_mode() {
#ifdef _OPENMP
  return ExecMode::OpenMP;
#else
  return ExecMode::Serial;
#endif
}

template <typename F>
void parallel_for(ExecMode mode, std::int64_t n, F&& body) {
#ifdef _OPENMP
  if (mode == ExecMode::OpenMP) {
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#else
  (void)mode;
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace witbound
