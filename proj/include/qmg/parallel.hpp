// Index-ordered parallel map over independent evaluations.

#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <type_traits>
#include <vector>

namespace qmg::parallel {

/// Applies QMG_THREADS (if set to a positive integer) as the OpenMP thread cap.
void configure_from_env();

int max_threads();

/// results[i] = fn(i), evaluated serially. Reference for parallel_map.
template <class Fn>
auto serial_map(std::size_t count, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

/// results[i] = fn(i), evaluated with OpenMP. Output order is by index, never
/// by completion. The first exception thrown by any task is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<R> out(count);
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(qmg_parallel_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace qmg::parallel
