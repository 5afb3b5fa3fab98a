#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace freelip {

// Evaluates fn(0..count-1) into a vector, optionally across a small thread
// pool. Results are merged positionally, so reductions over the output are
// deterministic regardless of the worker count.
template <typename T, typename Fn>
std::vector<T> parallel_map(size_t count, int jobs, Fn fn) {
  std::vector<T> out(count);
  if (jobs <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  size_t workers = std::min<size_t>(jobs, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (size_t i = w; i < count; i += workers) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace freelip
