#pragma once

#include <cstddef>
#include <functional>

namespace fracdyn {

/// Worker cap: FRACDYN_THREADS when set to a positive integer, otherwise the
/// number of hardware threads (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 means
/// worker_count()). Indices are claimed dynamically; the first exception
/// thrown by any body is rethrown after all workers have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t threads = 0);

}  // namespace fracdyn
