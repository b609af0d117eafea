#pragma once

#include <cstddef>
#include <functional>

namespace roofbound {

/// Worker count: ROOFBOUND_THREADS when set (positive integer), otherwise the
/// available hardware parallelism. Affects speed only, never values.
int thread_count();

/// Run fn(0..n-1), possibly across threads. Each index must be independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace roofbound
