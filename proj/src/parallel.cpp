#include "sqbasis/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace sqbasis {

void parallelForChunks(int chunkCount, const std::function<void(int)>& fn,
                       int maxThreads) {
  if (chunkCount <= 0) return;
  int threads = maxThreads > 0 ? maxThreads
                               : static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;
  threads = std::min(threads, chunkCount);
  if (threads == 1) {
    for (int c = 0; c < chunkCount; ++c) fn(c);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int c = next.fetch_add(1); c < chunkCount; c = next.fetch_add(1)) fn(c);
    });
  }
  for (auto& worker : pool) worker.join();
}

}  // namespace sqbasis
