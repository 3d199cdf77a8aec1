#ifndef REVSTACK_SWEEP_HPP
#define REVSTACK_SWEEP_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

#include "revstack/permutation.hpp"

namespace revstack
{

/// Worker count from REVSTACK_WORKERS, falling back to hardware concurrency.
unsigned default_workers();

/// Resolves 0 to default_workers().
inline unsigned resolve_workers(unsigned workers)
{
  return workers == 0 ? default_workers() : workers;
}

/// Exhaustive sweep over S_n split into contiguous rank ranges, one per worker.
/// Each worker folds into its own copy of `init` with `visit(acc, values)`;
/// the partial results are combined left to right with `merge(acc, part)`,
/// so any associative merge gives the same answer for every worker count.
template <class Acc, class Visit, class Merge>
Acc parallel_sweep(int n, unsigned workers, const Acc &init, Visit visit, Merge merge)
{
  const auto ranges = partition_ranks(n, resolve_workers(workers));
  std::vector<Acc> parts(ranges.size(), init);
  auto run = [&](std::size_t w) {
    Acc &acc = parts[w];
    for_each_permutation(n, ranges[w], [&](std::span<const int> values) { visit(acc, values); });
  };
  if (ranges.size() == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(ranges.size());
    for (std::size_t w = 0; w < ranges.size(); ++w)
      pool.emplace_back(run, w);
  }
  Acc result = init;
  for (auto &part : parts)
    merge(result, part);
  return result;
}

/// Runs `work(first, last)` over [0, count) split into contiguous chunks and
/// returns the per-chunk results in chunk order.
template <class Work>
auto parallel_chunks(std::size_t count, unsigned workers, Work work)
  -> std::vector<decltype(work(std::size_t{}, std::size_t{}))>
{
  using Result = decltype(work(std::size_t{}, std::size_t{}));
  const std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(resolve_workers(workers), count));
  std::vector<Result> out(parts);
  auto run = [&](std::size_t w) { out[w] = work(count * w / parts, count * (w + 1) / parts); };
  if (parts == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(parts);
    for (std::size_t w = 0; w < parts; ++w)
      pool.emplace_back(run, w);
  }
  return out;
}

} // namespace revstack

#endif // REVSTACK_SWEEP_HPP
