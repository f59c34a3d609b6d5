#pragma once

#include <cstddef>
#include <functional>

namespace thermal_ising {

// Worker count: THERMAL_ISING_THREADS if set and positive, otherwise the
// hardware concurrency (at least 1).
int thread_count();

// Runs body(i) for i in [0, n) over thread_count() workers.  Results must be
// written to per-index slots; the first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace thermal_ising
