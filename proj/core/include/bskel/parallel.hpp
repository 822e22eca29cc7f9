#pragma once

#include <cstddef>
#include <functional>

namespace bskel {

/// Worker count: BSKEL_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 means the
/// default). Each index runs exactly once; the first exception thrown by a
/// body is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, std::size_t threads = 0);

} // namespace bskel
