#include "revstack/basis.hpp"

#include <algorithm>
#include <string>

#include "revstack/pairs.hpp"
#include "revstack/sweep.hpp"

namespace revstack::basis
{

namespace
{

// Members are kept packed four bits per entry; n <= 15.
using Packed = std::uint64_t;

Packed pack(std::span<const int> values)
{
  Packed p = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    p |= static_cast<Packed>(values[i]) << (4 * i);
  return p;
}

void unpack(Packed p, int n, std::vector<int> &out)
{
  out.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = static_cast<int>((p >> (4 * i)) & 0xF);
}

/// Writes `parent` with the value n+1 inserted before index `slot`.
void insert_top(const std::vector<int> &parent, int slot, std::vector<int> &out)
{
  const int n = static_cast<int>(parent.size());
  out.resize(parent.size() + 1);
  for (int i = 0, j = 0; i <= n; ++i)
    out[static_cast<std::size_t>(i)] = i == slot ? n + 1 : parent[static_cast<std::size_t>(j++)];
}

bool deletions_within(std::span<const int> values, int tier_bound, std::vector<int> &scratch)
{
  const int n = static_cast<int>(values.size());
  scratch.resize(values.size() - 1);
  for (int skip = 0; skip < n; ++skip) {
    const int removed = values[static_cast<std::size_t>(skip)];
    for (int i = 0, j = 0; i < n; ++i) {
      if (i == skip)
        continue;
      const int v = values[static_cast<std::size_t>(i)];
      scratch[static_cast<std::size_t>(j++)] = v > removed ? v - 1 : v;
    }
    if (pairs::rev_tier(scratch) > tier_bound)
      return false;
  }
  return true;
}

bool basis_test(std::span<const int> values, int tier_bound, std::vector<int> &scratch)
{
  return !values.empty() && pairs::rev_tier(values) > tier_bound && deletions_within(values, tier_bound, scratch);
}

void check_search(int tier_bound, int max_len, const SearchOptions &options)
{
  if (tier_bound < 0)
    throw std::invalid_argument("tier bound must be non-negative");
  const int cap = options.long_running ? extended_search_cap : default_search_cap;
  if (max_len < 1 || max_len > cap)
    throw CapExceeded("max_len " + std::to_string(max_len) + " outside [1, " + std::to_string(cap) + "]" +
                      (max_len <= extended_search_cap && !options.long_running ? " (enable long_running)" : ""));
}

BasisReport finish(int tier_bound, int max_len, std::vector<Permutation> found)
{
  BasisReport report;
  report.tier_bound = tier_bound;
  report.search_bound = max_len;
  report.complete = max_len >= length_bound(tier_bound);
  std::sort(found.begin(), found.end(), [](const Permutation &a, const Permutation &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (auto &p : found)
    report.elements_by_length[p.size()].push_back(std::move(p));
  return report;
}

BasisReport search_exhaustive(int tier_bound, int max_len, const SearchOptions &options)
{
  std::vector<Permutation> found;
  for (int n = 1; n <= max_len; ++n) {
    if (options.progress)
      options.progress(n, 0);
    auto hits = parallel_sweep(
      n, options.workers, std::vector<Permutation>{},
      [tier_bound, scratch = std::vector<int>{}](std::vector<Permutation> &acc, std::span<const int> values) mutable {
        if (basis_test(values, tier_bound, scratch))
          acc.push_back(Permutation::from_trusted(std::vector<int>(values.begin(), values.end())));
      },
      [](std::vector<Permutation> &acc, const std::vector<Permutation> &part) {
        acc.insert(acc.end(), part.begin(), part.end());
      });
    found.insert(found.end(), hits.begin(), hits.end());
  }
  return finish(tier_bound, max_len, std::move(found));
}

struct Extension
{
  std::vector<Packed> members;
  std::vector<Permutation> basis;
};

// Every basis element and every class member of length n+1 loses its
// maximum to a class member of length n, so inserting n+1 into members
// reaches all of them exactly once.
BasisReport search_extension(int tier_bound, int max_len, const SearchOptions &options)
{
  std::vector<Packed> members{pack(std::vector<int>{1})};
  std::vector<Permutation> found; // length 1 is never outside a tier class

  for (int n = 1; n < max_len; ++n) {
    if (options.progress)
      options.progress(n + 1, members.size());
    const bool keep_members = n + 1 < max_len;
    auto parts = parallel_chunks(members.size(), options.workers, [&](std::size_t first, std::size_t last) {
      Extension ext;
      std::vector<int> parent, child, scratch;
      for (std::size_t m = first; m < last; ++m) {
        unpack(members[m], n, parent);
        for (int slot = 0; slot <= n; ++slot) {
          insert_top(parent, slot, child);
          if (pairs::rev_tier(child) <= tier_bound) {
            if (keep_members)
              ext.members.push_back(pack(child));
          } else if (deletions_within(child, tier_bound, scratch)) {
            ext.basis.push_back(Permutation::from_trusted(child));
          }
        }
      }
      return ext;
    });
    std::vector<Packed> next;
    for (auto &part : parts) {
      next.insert(next.end(), part.members.begin(), part.members.end());
      found.insert(found.end(), part.basis.begin(), part.basis.end());
    }
    members = std::move(next);
  }
  return finish(tier_bound, max_len, std::move(found));
}

} // namespace

std::vector<Permutation> BasisReport::elements() const
{
  std::vector<Permutation> out;
  for (const auto &[len, perms] : elements_by_length)
    out.insert(out.end(), perms.begin(), perms.end());
  return out;
}

std::size_t BasisReport::size() const
{
  std::size_t s = 0;
  for (const auto &[len, perms] : elements_by_length)
    s += perms.size();
  return s;
}

const char *to_string(Strategy s)
{
  return s == Strategy::Exhaustive ? "exhaustive" : "extension";
}

Strategy default_strategy(int tier_bound)
{
  return tier_bound <= 1 ? Strategy::Exhaustive : Strategy::Extension;
}

bool is_basis_element(const Permutation &perm, int tier_bound)
{
  if (tier_bound < 0)
    throw std::invalid_argument("tier bound must be non-negative");
  std::vector<int> scratch;
  return basis_test(perm.values(), tier_bound, scratch);
}

BasisReport compute_basis(int tier_bound, int max_len, Strategy strategy, const SearchOptions &options)
{
  check_search(tier_bound, max_len, options);
  return strategy == Strategy::Exhaustive ? search_exhaustive(tier_bound, max_len, options)
                                          : search_extension(tier_bound, max_len, options);
}

bool avoids_all(std::span<const int> perm, const std::vector<Permutation> &basis)
{
  return std::none_of(basis.begin(), basis.end(),
                      [&](const Permutation &b) { return contains_pattern(perm, b.values()); });
}

bool avoids_all(const Permutation &perm, const std::vector<Permutation> &basis)
{
  return avoids_all(perm.values(), basis);
}

std::vector<std::uint64_t> enumerate_av(const std::vector<Permutation> &basis, int max_n, unsigned workers)
{
  if (max_n < 0 || max_n > av_count_cap)
    throw CapExceeded("max_n " + std::to_string(max_n) + " outside [0, " + std::to_string(av_count_cap) + "]");
  std::vector<std::uint64_t> counts;
  const bool empty_ok = avoids_all(std::span<const int>{}, basis);
  counts.push_back(empty_ok ? 1 : 0);
  std::vector<Packed> members;
  if (empty_ok)
    members.push_back(0);
  for (int n = 0; n < max_n; ++n) {
    const bool keep = n + 1 < max_n;
    auto parts = parallel_chunks(members.size(), workers, [&](std::size_t first, std::size_t last) {
      std::pair<std::uint64_t, std::vector<Packed>> out{0, {}};
      std::vector<int> parent, child;
      for (std::size_t m = first; m < last; ++m) {
        unpack(members[m], n, parent);
        for (int slot = 0; slot <= n; ++slot) {
          insert_top(parent, slot, child);
          if (!avoids_all(child, basis))
            continue;
          ++out.first;
          if (keep)
            out.second.push_back(pack(child));
        }
      }
      return out;
    });
    std::uint64_t count = 0;
    std::vector<Packed> next;
    for (auto &[c, packed] : parts) {
      count += c;
      next.insert(next.end(), packed.begin(), packed.end());
    }
    counts.push_back(count);
    members = std::move(next);
  }
  return counts;
}

} // namespace revstack::basis
