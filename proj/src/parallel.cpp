#include "icx/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace icx {

std::size_t worker_count() {
  const char* env = std::getenv("ICX_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    long v = std::stol(env);
    return static_cast<std::size_t>(std::clamp(v, 1L, 256L));
  } catch (...) {
    return 1;
  }
}

namespace detail {

std::optional<std::size_t> first_hit_index(std::size_t count, const std::function<bool(std::size_t)>& probe) {
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (probe(i)) return i;
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  auto run = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      // Indices past the best hit so far cannot change the answer.
      if (i >= count || i >= best.load()) return;
      if (probe(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  pool.clear();
  if (best.load() == count) return std::nullopt;
  return best.load();
}

}  // namespace detail

}  // namespace icx
