#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <thread>
#include <vector>

namespace homlie::detail {

/// Worker count: HOMLIE_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
inline std::size_t thread_count() {
  if (const char* env = std::getenv("HOMLIE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n) and returns the result for the smallest i
/// that produced a value. Indices are split into contiguous blocks, one per
/// worker, so each worker can stop at its own first hit.
template <class T, class Fn>
std::optional<T> first_hit(std::size_t n, Fn fn) {
  const std::size_t workers = std::min(thread_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (auto r = fn(i)) return r;
    return std::nullopt;
  }
  std::vector<std::optional<T>> found(workers);
  std::vector<std::thread> pool;
  const std::size_t block = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      const std::size_t lo = w * block;
      const std::size_t hi = std::min(n, lo + block);
      for (std::size_t i = lo; i < hi; ++i)
        if (auto r = fn(i)) {
          found[w] = std::move(r);
          return;
        }
    });
  for (auto& t : pool) t.join();
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace homlie::detail
