#pragma once

#include <cstddef>
#include <functional>

namespace rotavg {

/// Number of workers to use for a requested count; 0 means the machine's
/// hardware concurrency. Always 1 in single-threaded builds.
unsigned resolve_threads(unsigned requested);

/// Runs body(i) for i in [0, count) on up to `threads` workers, each taking a
/// contiguous block. Callers write results into per-index slots, so output
/// never depends on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace rotavg
