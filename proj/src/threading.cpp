#include "gluq/threading.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace gluq {

namespace {
std::atomic<int> g_override{0};

int env_cap() {
  if (const char* s = std::getenv("GLUQ_THREADS")) {
    const int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 0;
}
}  // namespace

int max_threads() {
  const int forced = g_override.load();
  if (forced > 0) return forced;
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const int cap = env_cap(); cap > 0) n = std::min(n, cap);
  return n;
}

void set_max_threads(int n) { g_override.store(n > 0 ? n : 0); }

}  // namespace gluq
