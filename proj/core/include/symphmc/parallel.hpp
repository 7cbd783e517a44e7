#pragma once

#include <cstddef>
#include <functional>

namespace symphmc {

/// Worker count: SYMPHMC_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs fn(0), ..., fn(n-1) on up to `threads` workers. Each index runs
/// exactly once; the first exception thrown is rethrown after all workers
/// stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t threads = worker_count());

}  // namespace symphmc
