#pragma once

#include <cstddef>
#include <functional>

namespace orthoframes {

// Number of worker threads: hardware concurrency capped by the
// ORTHOFRAMES_THREADS environment variable.
std::size_t worker_count();

// Runs fn(i) for i in [0, n).  Work is split into chunks whose layout depends
// only on n, so per-index results are identical no matter how many threads
// ran; callers that reduce must do so in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace orthoframes
