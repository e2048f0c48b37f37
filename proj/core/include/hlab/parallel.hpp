#pragma once

#include <cstddef>
#include <functional>

namespace hlab {

unsigned default_thread_count();

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
// concurrency).  Callers write results into pre-sized slots indexed by i so
// output never depends on scheduling order.  The first exception thrown by a
// task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

}
