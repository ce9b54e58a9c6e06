#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace bdcoh {

/// Worker count: BD_CLASSIFY_THREADS if set and positive, else hardware.
inline unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BD_CLASSIFY_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return hw;
}

/// out[i] = f(i) for i < count; results keep input order. The first
/// exception thrown by any task is rethrown.
template <class Result, class F>
std::vector<Result> parallel_map(size_t count, F f) {
  std::vector<Result> out(count);
  const unsigned workers = static_cast<unsigned>(std::min<size_t>(thread_budget(), count));
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i; (i = next++) < count;) {
        try {
          out[i] = f(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace bdcoh
