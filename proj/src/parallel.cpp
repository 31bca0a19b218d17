#include "ltnc/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ltnc {

namespace {
std::atomic<int> g_max_threads{1};
}

void set_max_threads(int n) { g_max_threads.store(n < 1 ? 1 : n); }

int max_threads() { return g_max_threads.load(); }

void parallel_for(Index count, const std::function<void(Index)>& fn) {
  if (count <= 0) return;
  const int workers =
      static_cast<int>(std::min<Index>(count, g_max_threads.load()));
  if (workers <= 1) {
    for (Index i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<Index> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const Index block = std::max<Index>(Index{1}, count / (workers * 8));

  auto worker = [&] {
    for (;;) {
      const Index begin = next.fetch_add(block);
      if (begin >= count) return;
      const Index end = std::min(count, begin + block);
      try {
        for (Index i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ltnc
