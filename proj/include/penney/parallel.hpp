#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace penney {

/// Worker count used by the exhaustive sweeps. 0 means one per hardware
/// thread. Results never depend on this value.
void set_worker_threads(unsigned count) noexcept;
unsigned worker_threads() noexcept;

/// Splits [0, count) into contiguous chunks, maps each chunk with
/// `fn(begin, end) -> T` and folds the chunk results left to right with
/// `combine(T&, T&&)`. Chunk boundaries depend on the thread count, so
/// `combine` must be associative for the result to be thread-count invariant.
template <class T, class Fn, class Combine>
T parallel_reduce(std::uint64_t count, T init, Fn&& fn, Combine&& combine) {
  const unsigned threads = worker_threads();
  if (threads <= 1 || count < 2 * threads) {
    combine(init, fn(std::uint64_t{0}, count));
    return init;
  }
  const std::uint64_t chunk = (count + threads - 1) / threads;
  std::vector<T> parts(threads);
  std::vector<std::exception_ptr> failures(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min<std::uint64_t>(count, t * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(count, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        parts[t] = fn(begin, end);
      } catch (...) {
        failures[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& failure : failures)
    if (failure) std::rethrow_exception(failure);
  for (auto& part : parts) combine(init, std::move(part));
  return init;
}

}  // namespace penney
