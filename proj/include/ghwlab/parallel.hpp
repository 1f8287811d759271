#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ghwlab {

/// Runs fn(worker) for worker in [0, threads) and rethrows the first
/// exception. threads <= 1 runs inline.
template <typename Fn>
void run_workers(unsigned threads, Fn&& fn) {
  if (threads <= 1) {
    fn(0u);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        fn(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ghwlab
