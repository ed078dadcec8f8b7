#pragma once

namespace lta {

/// Threads used by the OpenMP kernels; 0 restores the runtime default (all cores).
void set_num_threads(int threads);
int num_threads();

}  // namespace lta
