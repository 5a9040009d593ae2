#pragma once

#include <cstddef>
#include <functional>

namespace pw {

/// Worker cap used by parallel_for when no explicit count is given (0 = hardware).
void set_thread_limit(unsigned threads);
unsigned thread_limit();

/// Runs body(i) for i in [0, count) on up to thread_limit() threads. Tasks are
/// handed out dynamically; the first exception thrown is rethrown after join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pw
