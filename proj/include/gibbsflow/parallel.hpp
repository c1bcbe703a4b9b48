#pragma once

#include <cstddef>
#include <functional>

namespace gibbsflow {

// Worker count: hardware concurrency, capped by GIBBSFLOW_THREADS when set.
unsigned worker_count();

// Calls body(i) for i in [0, count). Exceptions are rethrown for the lowest failing index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace gibbsflow
