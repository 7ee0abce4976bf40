#pragma once

#include <cstddef>
#include <functional>

namespace rfcbf {

/// Run fn(0..n-1) on up to `workers` threads. Tasks must write to
/// disjoint slots; the first exception thrown by any task is rethrown
/// after all threads join. workers <= 1 runs inline.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace rfcbf
