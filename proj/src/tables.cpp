#include "revstack/tables.hpp"

#include <algorithm>
#include <string>

#include "revstack/pairs.hpp"
#include "revstack/permutation.hpp"
#include "revstack/sweep.hpp"

namespace revstack::tables
{

namespace
{

int tier_slots(int n)
{
  return std::max(n - 1, 1);
}

void check_cap(int max_n, const SweepOptions &options, int hard_cap)
{
  const int cap = options.allow_large ? hard_cap : std::min(hard_cap, default_table_cap);
  if (max_n < 1 || max_n > cap)
    throw CapExceeded("max_n " + std::to_string(max_n) + " outside [1, " + std::to_string(cap) + "]" +
                      (max_n <= hard_cap && !options.allow_large ? " (pass allow_large for more)" : ""));
}

} // namespace

const char *to_string(TableKind kind)
{
  switch (kind) {
  case TableKind::ExactTier: return "exact_tier";
  case TableKind::CumulativeTier: return "cumulative_tier";
  case TableKind::Refined: return "refined";
  }
  return "?";
}

BigInt CountTable::at(int n, int t, int k) const
{
  auto it = _entries.find({n, t, k});
  return it == _entries.end() ? BigInt(0) : it->second;
}

void CountTable::set(int n, int t, int k, BigInt value)
{
  if (value < 0)
    throw std::invalid_argument("counts are non-negative");
  if (value == 0)
    _entries.erase({n, t, k});
  else
    _entries[{n, t, k}] = std::move(value);
}

BigInt CountTable::sum_k(int n, int t) const
{
  BigInt s = 0;
  for (auto it = _entries.lower_bound({n, t, 0}); it != _entries.end() && it->first[0] == n && it->first[1] == t;
       ++it)
    s += it->second;
  return s;
}

int CountTable::max_t(int n) const
{
  int best = -1;
  for (auto it = _entries.lower_bound({n, 0, 0}); it != _entries.end() && it->first[0] == n; ++it)
    best = std::max(best, it->first[1]);
  return best;
}

LengthCensus::LengthCensus(int n_)
: n(n_),
  by_tier(static_cast<std::size_t>(tier_slots(n_)), 0),
  eta(static_cast<std::size_t>(std::max(n_, 0)), 0),
  mu_up(static_cast<std::size_t>(tier_slots(n_)), std::vector<std::uint64_t>(static_cast<std::size_t>(std::max(n_, 0)), 0)),
  mu_down(mu_up)
{}

void LengthCensus::merge(const LengthCensus &other)
{
  auto add = [](std::vector<std::uint64_t> &a, const std::vector<std::uint64_t> &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      a[i] += b[i];
  };
  add(by_tier, other.by_tier);
  add(eta, other.eta);
  for (std::size_t t = 0; t < mu_up.size(); ++t) {
    add(mu_up[t], other.mu_up[t]);
    add(mu_down[t], other.mu_down[t]);
  }
}

LengthCensus census(int n, unsigned workers)
{
  return parallel_sweep(
    n, workers, LengthCensus(n),
    [](LengthCensus &acc, std::span<const int> values) {
      const auto orient = pairs::orientations(values);
      int tier = 0;
      auto want = pairs::Orientation::Down;
      auto first = pairs::Orientation::NotSeparated;
      for (auto o : orient) {
        if (first == pairs::Orientation::NotSeparated)
          first = o;
        if (o == want) {
          ++tier;
          want = want == pairs::Orientation::Down ? pairs::Orientation::Up : pairs::Orientation::Down;
        }
      }
      const auto k = static_cast<std::size_t>(std::find(values.begin(), values.end(), 1) - values.begin());
      ++acc.by_tier[static_cast<std::size_t>(tier)];
      switch (first) {
      case pairs::Orientation::NotSeparated: ++acc.eta[k]; break;
      case pairs::Orientation::Up: ++acc.mu_up[static_cast<std::size_t>(tier)][k]; break;
      case pairs::Orientation::Down: ++acc.mu_down[static_cast<std::size_t>(tier)][k]; break;
      }
    },
    [](LengthCensus &acc, const LengthCensus &part) { acc.merge(part); });
}

std::vector<LengthCensus> census_up_to(int max_n, const SweepOptions &options)
{
  check_cap(max_n, options, extended_table_cap);
  std::vector<LengthCensus> out;
  out.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    if (options.progress)
      options.progress(n);
    out.push_back(census(n, options.workers));
  }
  return out;
}

CountTable exact_tier_table(const std::vector<LengthCensus> &census)
{
  CountTable table(TableKind::ExactTier, static_cast<int>(census.size()));
  for (const auto &c : census)
    for (std::size_t t = 0; t < c.by_tier.size(); ++t)
      table.set(c.n, static_cast<int>(t), BigInt(c.by_tier[t]));
  return table;
}

CountTable exact_tier_table(int max_n, const SweepOptions &options)
{
  return exact_tier_table(census_up_to(max_n, options));
}

CountTable cumulative_from_exact(const CountTable &exact)
{
  if (exact.kind() != TableKind::ExactTier)
    throw std::invalid_argument("cumulative_from_exact expects an exact-tier table");
  const int max_n = exact.max_n();
  CountTable table(TableKind::CumulativeTier, max_n);
  const int columns = std::max(max_n - 1, 1);
  for (int n = 1; n <= max_n; ++n) {
    BigInt running = 0;
    for (int t = 0; t < columns; ++t) {
      running += exact.at(n, t);
      table.set(n, t, running);
    }
  }
  return table;
}

CountTable cumulative_tier_table(int max_n, const SweepOptions &options)
{
  return cumulative_from_exact(exact_tier_table(max_n, options));
}

BigInt RefinedCounts::f(int n, int t, int k) const
{
  BigInt v = mu_up.at(n, t, k) + mu_down.at(n, t, k);
  if (t == 0)
    v += eta.at(n, 0, k);
  return v;
}

RefinedCounts refined_counts_bruteforce(const std::vector<LengthCensus> &census)
{
  RefinedCounts rc;
  rc.max_n = static_cast<int>(census.size());
  rc.eta = CountTable(TableKind::Refined, rc.max_n);
  rc.mu_up = CountTable(TableKind::Refined, rc.max_n);
  rc.mu_down = CountTable(TableKind::Refined, rc.max_n);
  for (const auto &c : census) {
    for (int k = 1; k <= c.n; ++k)
      rc.eta.set(c.n, 0, k, BigInt(c.eta[static_cast<std::size_t>(k - 1)]));
    for (std::size_t t = 0; t < c.mu_up.size(); ++t)
      for (int k = 1; k <= c.n; ++k) {
        rc.mu_up.set(c.n, static_cast<int>(t), k, BigInt(c.mu_up[t][static_cast<std::size_t>(k - 1)]));
        rc.mu_down.set(c.n, static_cast<int>(t), k, BigInt(c.mu_down[t][static_cast<std::size_t>(k - 1)]));
      }
  }
  return rc;
}

RefinedCounts refined_counts_bruteforce(int max_n, const SweepOptions &options)
{
  if (max_n > default_table_cap)
    throw CapExceeded("refined brute-force counts are limited to max_n <= " + std::to_string(default_table_cap));
  return refined_counts_bruteforce(census_up_to(max_n, options));
}

RefinedCounts refined_counts_recurrence(int max_n)
{
  if (max_n < 1)
    throw std::invalid_argument("max_n must be positive");

  // Dense working arrays indexed [t][k] with k in 0..n+1 so that sums over
  // out-of-range indices simply read zero.
  using Grid = std::vector<std::vector<BigInt>>;
  const auto width = static_cast<std::size_t>(max_n + 2);
  const auto depth = static_cast<std::size_t>(std::max(max_n, 1));
  auto blank = [&] { return Grid(depth, std::vector<BigInt>(width, 0)); };

  std::vector<BigInt> eta(width, 0);
  Grid up = blank();
  Grid down = blank();
  eta[1] = 1;

  RefinedCounts rc;
  rc.max_n = max_n;
  rc.eta = CountTable(TableKind::Refined, max_n);
  rc.mu_up = CountTable(TableKind::Refined, max_n);
  rc.mu_down = CountTable(TableKind::Refined, max_n);

  auto record = [&](int n) {
    for (int k = 1; k <= n; ++k) {
      rc.eta.set(n, 0, k, eta[static_cast<std::size_t>(k)]);
      for (std::size_t t = 0; t < depth; ++t) {
        rc.mu_up.set(n, static_cast<int>(t), k, up[t][static_cast<std::size_t>(k)]);
        rc.mu_down.set(n, static_cast<int>(t), k, down[t][static_cast<std::size_t>(k)]);
      }
    }
  };
  record(1);

  // Inclusive range sums over 1..n of a row, clipped to valid k.
  auto sum_range = [](const std::vector<BigInt> &row, int lo, int hi) {
    BigInt s = 0;
    lo = std::max(lo, 1);
    hi = std::min(hi, static_cast<int>(row.size()) - 1);
    for (int i = lo; i <= hi; ++i)
      s += row[static_cast<std::size_t>(i)];
    return s;
  };

  for (int n = 1; n < max_n; ++n) {
    std::vector<BigInt> eta_next(width, 0);
    Grid up_next = blank();
    Grid down_next = blank();
    for (int k = 1; k <= n + 1; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      eta_next[kk] = eta[kk] + eta[kk - 1];
      up_next[0][kk] = sum_range(eta, k + 1, n) + sum_range(up[0], k - 1, n);
      for (std::size_t t = 1; t < depth; ++t)
        up_next[t][kk] = sum_range(down[t], k + 1, n) + sum_range(up[t], k - 1, n);
      if (depth > 1)
        down_next[1][kk] = sum_range(eta, 1, k - 2) + sum_range(down[1], 1, k);
      for (std::size_t t = 2; t < depth; ++t)
        down_next[t][kk] = sum_range(up[t - 2], 1, k - 2) + sum_range(down[t], 1, k);
    }
    eta = std::move(eta_next);
    up = std::move(up_next);
    down = std::move(down_next);
    record(n + 1);
  }
  return rc;
}

BigInt eta_closed_form(int n, int k)
{
  if (n < 1 || k < 1 || k > n)
    throw std::out_of_range("eta(n, k) needs 1 <= k <= n");
  BigInt b = 1;
  const int top = n - 1;
  const int choose = k - 1;
  for (int i = 1; i <= choose; ++i)
    b = b * (top - choose + i) / i;
  return b;
}

} // namespace revstack::tables
