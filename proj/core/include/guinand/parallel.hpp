#pragma once

#include <cstddef>
#include <functional>

namespace guinand {

// Worker count: GUINAND_THREADS if set (0 = auto), else hardware concurrency.
std::size_t thread_budget();

// Runs fn(i) for i in [0, n) on up to thread_budget() threads.  Callers must
// write results into disjoint preallocated slots; the schedule is a static
// block partition, so output ordering never depends on thread timing.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace guinand
