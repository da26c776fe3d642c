#pragma once

#include <cstddef>
#include <functional>

namespace mcm {

/// Worker count: MCM_THREADS if set (>= 1), else hardware concurrency.
unsigned thread_budget();

/// Runs body(i) for i in [0, count) on up to thread_budget() threads. Callers that
/// aggregate must write into per-index slots; iteration order is unspecified.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace mcm
