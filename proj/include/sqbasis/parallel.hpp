#ifndef SQBASIS_PARALLEL_HPP
#define SQBASIS_PARALLEL_HPP

#include <functional>

namespace sqbasis {

/// Runs fn(chunk) for chunk in [0, chunkCount) across worker threads.
/// Chunks must be independent; callers merge per-chunk slots afterwards in
/// chunk order, which keeps reductions deterministic under any scheduling.
/// maxThreads = 0 uses the hardware concurrency.
void parallelForChunks(int chunkCount, const std::function<void(int)>& fn,
                       int maxThreads = 0);

}  // namespace sqbasis

#endif  // SQBASIS_PARALLEL_HPP
