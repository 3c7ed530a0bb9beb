#pragma once

#include <cstddef>
#include <functional>

namespace noderank {

/// Worker cap from NODERANK_THREADS (0 or unset = hardware concurrency).
std::size_t worker_count();

/// Runs body(block) for every block in [0, blocks) across up to
/// worker_count() threads. Callers make results independent of scheduling
/// by writing per-block outputs and reducing them in block order.
void parallel_blocks(std::size_t blocks, const std::function<void(std::size_t)>& body);

/// Block partition of [0, n) that depends only on n, so per-block partial
/// sums merge identically whatever the thread count.
struct BlockRange {
  std::size_t begin;
  std::size_t end;
};

std::size_t block_count(std::size_t n);
BlockRange block_range(std::size_t n, std::size_t block);

}  // namespace noderank
