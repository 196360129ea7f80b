#pragma once

#include <cstddef>
#include <functional>

namespace gradus {

/// Worker count: GRADUS_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n). Each index is handled exactly once; the first
/// exception thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gradus
