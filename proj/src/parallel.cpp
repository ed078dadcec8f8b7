#include "lta/parallel.hpp"

#include <omp.h>

namespace lta {

namespace {
int default_threads() {
  static const int threads = omp_get_max_threads();
  return threads;
}
}  // namespace

void set_num_threads(int threads) {
  const int fallback = default_threads();
  omp_set_num_threads(threads > 0 ? threads : fallback);
}

int num_threads() { return omp_get_max_threads(); }

}  // namespace lta
