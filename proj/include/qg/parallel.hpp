#pragma once

#include <cstddef>
#include <functional>

namespace qg {

/// Worker count: QG_THREADS if set and positive, else the hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. The first
/// exception thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qg
