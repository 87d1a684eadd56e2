#pragma once

// Fork-join loop helpers. Work is handed out in chunks via an atomic cursor,
// but every loop body writes only disjoint locations or merges commutatively,
// so results never depend on the worker count or the chunk schedule.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "hlm/common.hpp"

namespace hlm {

inline unsigned hardware_workers() {
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

inline unsigned resolve_workers(unsigned requested) {
  return requested == 0 ? hardware_workers() : requested;
}

// Runs body(begin, end) over [0, n) split into blocks of at most `grain`
// indices. With one worker (or a small range) the body runs inline. More
// workers than hardware threads would only add scheduler churn, so the
// spawn count is capped; results are worker-count independent either way.
template <typename Body>
void parallel_blocks(std::size_t n, unsigned workers, std::size_t grain, Body&& body) {
  if (grain == 0) grain = 1;
  if (n == 0) return;
  workers = std::min(workers, hardware_workers());
  if (workers <= 1 || n <= grain) {
    body(std::size_t{0}, n);
    return;
  }
  // Small chunks keep the tail balanced; one atomic bump per chunk is cheap.
  std::size_t chunk = n / (static_cast<std::size_t>(workers) * 32);
  if (chunk < grain) chunk = grain;

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      std::size_t begin = cursor.fetch_add(chunk, std::memory_order_relaxed);
      if (begin >= n) return;
      std::size_t end = begin + chunk < n ? begin + chunk : n;
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (unsigned t = 1; t < workers; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Per-index convenience wrapper.
template <typename Body>
void parallel_for(std::size_t n, unsigned workers, std::size_t grain, Body&& body) {
  parallel_blocks(n, workers, grain, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) body(i);
  });
}

// Two-pass parallel exclusive prefix sum; returns the grand total.
// out[i] = sum of value(j) for j < i.
template <typename ValueFn>
offset_t exclusive_scan(std::size_t n, unsigned workers, ValueFn&& value,
                        std::vector<offset_t>& out) {
  out.assign(n, 0);
  if (n == 0) return 0;
  workers = workers == 0 ? 1 : workers;
  std::size_t blocks = workers <= 1 ? 1 : static_cast<std::size_t>(workers) * 4;
  if (blocks > n) blocks = n;
  std::size_t per = (n + blocks - 1) / blocks;
  blocks = (n + per - 1) / per;

  std::vector<offset_t> block_sum(blocks, 0);
  parallel_for(blocks, workers, 1, [&](std::size_t blk) {
    std::size_t b = blk * per;
    std::size_t e = b + per < n ? b + per : n;
    offset_t acc = 0;
    for (std::size_t i = b; i < e; ++i) acc += static_cast<offset_t>(value(i));
    block_sum[blk] = acc;
  });

  offset_t running = 0;
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    offset_t s = block_sum[blk];
    block_sum[blk] = running;
    running += s;
  }

  parallel_for(blocks, workers, 1, [&](std::size_t blk) {
    std::size_t b = blk * per;
    std::size_t e = b + per < n ? b + per : n;
    offset_t acc = block_sum[blk];
    for (std::size_t i = b; i < e; ++i) {
      out[i] = acc;
      acc += static_cast<offset_t>(value(i));
    }
  });
  return running;
}

}  // namespace hlm
