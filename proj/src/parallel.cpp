#include "gmf/parallel.hpp"

#include <atomic>

namespace gmf {

namespace {
std::atomic<unsigned> configured_threads{0};
}

void set_thread_count(unsigned threads) { configured_threads = threads; }

unsigned thread_count() {
  const unsigned t = configured_threads.load();
  if (t != 0) return t;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace gmf
