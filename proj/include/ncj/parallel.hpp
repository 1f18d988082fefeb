#pragma once

#include <cstddef>
#include <functional>

namespace ncj {

/// Worker count from NCJ_WORKERS (default: hardware concurrency, at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads.  Callers
/// write into per-index slots and merge afterwards, so results never depend
/// on scheduling.  The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ncj
