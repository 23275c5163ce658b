#pragma once

#include <functional>

namespace et {

/// Runs fn(i) for i in [0, n) on up to `threads` worker threads. Indices are
/// handed out through a shared counter; each call must be independent and
/// write only to its own output slot. threads <= 1 runs inline. The first
/// exception thrown by any worker is rethrown after all workers join.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

/// Number of hardware threads, at least 1.
int hardware_threads();

}  // namespace et
