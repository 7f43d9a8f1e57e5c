#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace flipchain {

// Worker count: `requested` when nonzero, else FLIPCHAIN_THREADS, else the
// hardware concurrency. Never less than 1.
unsigned resolve_threads(unsigned requested = 0);

// out[k] = fn(k) for k in [0, n), evaluated on up to `threads` workers.
// Results land in index order regardless of scheduling; the first exception
// in index order is rethrown after all workers finish.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn fn) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        out[k] = fn(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t count = std::min<std::size_t>(threads == 0 ? 1 : threads, n);
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (std::size_t w = 0; w < count; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace flipchain
