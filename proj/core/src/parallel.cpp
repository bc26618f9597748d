#include "colorcount/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace colorcount {

int default_worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(long long total, int workers,
                     const std::function<void(int, long long, long long)>& body) {
  if (total <= 0) return;
  workers = std::max(1, workers);
  const int chunks = static_cast<int>(std::min<long long>(total, workers));
  if (chunks == 1) {
    body(0, 0, total);
    return;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(chunks);
  const long long base = total / chunks;
  const long long extra = total % chunks;
  long long begin = 0;
  for (int c = 0; c < chunks; ++c) {
    const long long size = base + (c < extra ? 1 : 0);
    const long long end = begin + size;
    pool.emplace_back([&, c, begin, end] {
      try {
        body(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace colorcount
