#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace cylt {

// Static partition of [begin, end) over `jobs` threads. Callers write results
// into per-index slots and reduce sequentially afterwards, so the outcome is
// independent of the thread count.
inline void parallel_for(int begin, int end, int jobs, const std::function<void(int)>& fn) {
  const int count = end - begin;
  if (count <= 0) return;
  if (jobs <= 1 || count < 2 * jobs) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  const int workers = jobs < count ? jobs : count;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      const int chunk_lo = begin + static_cast<int>(static_cast<long long>(count) * w / workers);
      const int chunk_hi = begin + static_cast<int>(static_cast<long long>(count) * (w + 1) / workers);
      try {
        for (int i = chunk_lo; i < chunk_hi; ++i) fn(i);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace cylt
