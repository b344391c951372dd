#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

namespace icx {

/// Worker count from ICX_THREADS (default 1, clamped to [1, 256]).
std::size_t worker_count();

/// Evaluates `probe(i)` for i in [0, count) and returns the smallest index
/// whose probe yields a value, together with that value. Work is spread over
/// worker_count() threads; the answer is the same for every thread count.
template <typename T>
std::optional<std::pair<std::size_t, T>> first_hit(std::size_t count,
                                                   const std::function<std::optional<T>(std::size_t)>& probe);

namespace detail {
/// Type-erased core of first_hit: `probe(i)` returns true on a hit and is
/// expected to stash its payload keyed by i.
std::optional<std::size_t> first_hit_index(std::size_t count, const std::function<bool(std::size_t)>& probe);
}  // namespace detail

template <typename T>
std::optional<std::pair<std::size_t, T>> first_hit(std::size_t count,
                                                   const std::function<std::optional<T>(std::size_t)>& probe) {
  std::mutex mu;
  std::map<std::size_t, T> hits;
  auto idx = detail::first_hit_index(count, [&](std::size_t i) {
    auto r = probe(i);
    if (!r) return false;
    std::lock_guard lock(mu);
    hits.emplace(i, std::move(*r));
    return true;
  });
  if (!idx) return std::nullopt;
  return std::make_pair(*idx, std::move(hits.at(*idx)));
}

}  // namespace icx
