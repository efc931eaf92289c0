#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gt1 {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Structural invariant violation. The CLI maps this to exit code 3: it means
// the computation contradicted itself, never that the input was bad.
struct internal_inconsistency : std::logic_error {
  explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

inline void ensure(bool cond, const char* msg) {
  if (!cond) throw internal_inconsistency(msg);
}

inline u32 resolve_threads(u32 requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw != 0 ? static_cast<u32>(hw) : 1;
}

// Runs fn(tid, lo, hi) over [0, n) split into `threads` contiguous chunks.
// Chunk bounds depend only on n and threads, so concatenating per-worker
// output in tid order gives a schedule-independent result.
inline void parallel_chunks(u64 n, u32 threads,
                            const std::function<void(u32, u64, u64)>& fn) {
  if (threads <= 1 || n < 2 * threads) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  u64 chunk = (n + threads - 1) / threads;
  for (u32 t = 0; t < threads; ++t) {
    u64 lo = static_cast<u64>(t) * chunk;
    u64 hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back(fn, t, lo, hi);
  }
  for (auto& th : pool) th.join();
}

}  // namespace gt1
