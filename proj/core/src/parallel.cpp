#include "partlab/parallel.hpp"

#include <atomic>
#include <algorithm>
#include <functional>
#include <mutex>
#include <exception>
#include <thread>
#include <vector>

namespace partlab {

void parallel_for(std::size_t begin, std::size_t end, unsigned jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (begin >= end) return;
  if (jobs <= 1 || end - begin == 1) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(jobs, end - begin));
  std::atomic<std::size_t> next{begin};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= end) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace partlab
