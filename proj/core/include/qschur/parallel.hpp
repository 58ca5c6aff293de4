#pragma once

#include <cstddef>
#include <functional>

namespace qschur {

/// Worker count resolution: explicit request if positive, else the
/// QSCHUR_JOBS environment variable, else hardware concurrency, else 1.
int resolve_jobs(int requested);

/// Runs fn(i) for i in [0, total) on up to `jobs` threads.  Work items are
/// claimed from a shared atomic counter; the first exception thrown by any
/// item is rethrown on the caller after all threads join.  Callers that
/// need deterministic output must write results into index i of a
/// preallocated buffer, never append.
void parallel_for(std::size_t total, int jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace qschur
