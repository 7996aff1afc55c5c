#include "penney/parallel.hpp"

#include <atomic>

namespace penney {
namespace {
std::atomic<unsigned> g_threads{0};
}

void set_worker_threads(unsigned count) noexcept { g_threads.store(count); }

unsigned worker_threads() noexcept {
  const unsigned requested = g_threads.load();
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace penney
