#include "qmg/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <omp.h>

namespace qmg::parallel {

void configure_from_env() {
  const char* raw = std::getenv("QMG_THREADS");
  if (raw == nullptr) return;
  int threads = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, threads);
  if (ec == std::errc{} && ptr == end && threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace qmg::parallel
