#ifndef FILTRA_TASK_POOL_HPP
#define FILTRA_TASK_POOL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace filtra {

// Bounded worker pool over an indexed task list. Results land in index
// order, so the assembled output is independent of scheduling. Tasks must
// not share mutable state.
template <class R>
std::vector<R> run_indexed_tasks(std::size_t count, unsigned jobs,
                                 const std::function<R(std::size_t)>& task) {
  std::vector<R> results(count);
  if (count == 0) return results;
  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace filtra

#endif
