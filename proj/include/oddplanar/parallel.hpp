#pragma once

#include <cstddef>
#include <functional>

namespace oddplanar {

/// Name of the environment variable that caps worker threads.
inline constexpr const char* kThreadsEnv = "ODDPLANAR_THREADS";

/// Worker count: ODDPLANAR_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int default_thread_count();

/// Calls `body(i)` for every i in [0, count) on up to `threads` workers.
/// Order of calls is unspecified; the first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  int threads = 0);

}  // namespace oddplanar
