#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace baskakov {

/// Environment variable holding the worker count for grid scans and tables.
inline constexpr const char* kThreadsEnv = "BASKAKOV_THREADS";

/// Worker count: $BASKAKOV_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
int thread_count();

/// Calls body(i) for i in [0, count) on up to thread_count() threads.
/// Each index is visited exactly once; the first exception thrown by any
/// call is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace baskakov
