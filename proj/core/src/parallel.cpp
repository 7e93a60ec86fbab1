#include "sset/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace sset {
namespace {

unsigned initial_thread_count() {
  if (const char* env = std::getenv("SSET_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<unsigned>(value);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::atomic<unsigned>& thread_setting() {
  static std::atomic<unsigned> setting{initial_thread_count()};
  return setting;
}

}  // namespace

unsigned thread_count() { return thread_setting().load(); }

void set_thread_count(unsigned threads) { thread_setting().store(threads == 0 ? 1 : threads); }

}  // namespace sset
