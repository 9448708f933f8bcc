#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace dspec {

// Splits [begin, end) into `workers` contiguous chunks, runs
// `body(lo, hi, partial)` on each with its own default-constructed partial,
// then folds the partials left to right with `merge(acc, partial)`.
// Chunk boundaries depend only on the range and worker count, and the
// merge order is fixed, so integer reductions are reproducible.
template <class Partial, class Body, class Merge>
Partial parallel_reduce(std::uint64_t begin, std::uint64_t end, unsigned workers, Body&& body,
                        Merge&& merge) {
  if (end <= begin) return Partial{};
  const std::uint64_t span = end - begin;
  workers = std::max(1u, workers);
  if (workers == 1 || span < 2 * workers) {
    Partial acc{};
    body(begin, end, acc);
    return acc;
  }
  const auto chunks = static_cast<unsigned>(std::min<std::uint64_t>(workers, span));
  std::vector<Partial> partials(chunks);
  std::vector<std::exception_ptr> failures(chunks);
  {
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    for (unsigned c = 0; c < chunks; ++c) {
      const std::uint64_t lo = begin + span * c / chunks;
      const std::uint64_t hi = begin + span * (c + 1) / chunks;
      pool.emplace_back([&, c, lo, hi] {
        try {
          body(lo, hi, partials[c]);
        } catch (...) {
          failures[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  Partial acc = std::move(partials.front());
  for (unsigned c = 1; c < chunks; ++c) merge(acc, partials[c]);
  return acc;
}

// Element-wise histogram merge.
template <class T>
void merge_histograms(std::vector<T>& acc, const std::vector<T>& part) {
  if (acc.size() < part.size()) acc.resize(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) acc[i] += part[i];
}

}  // namespace dspec
