#pragma once

#include <cstddef>
#include <functional>

namespace orbitconics {

/// Worker count: ORBITCONICS_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
/// write into preallocated per-index slots so results stay deterministic.
/// If bodies throw, the exception from the lowest index is rethrown on the
/// calling thread after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace orbitconics
