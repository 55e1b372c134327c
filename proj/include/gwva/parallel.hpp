#pragma once

#include <cstddef>
#include <functional>

namespace gwva {

/// Process-wide worker count for per-cell stages (the CLI's --threads).
/// 0 means "use available parallelism". Thread count never affects results:
/// workers own disjoint index ranges and all reductions that feed outputs run
/// in a fixed order.
void set_worker_threads(unsigned n);
unsigned worker_threads();

/// Run fn(begin, end) over a partition of [0, n) on the configured worker
/// pool. fn must only write state owned by its range. Falls back to a single
/// inline call for small n or one worker.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace gwva
