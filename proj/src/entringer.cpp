#include "revstack/entringer.hpp"

#include <algorithm>
#include <string>

#include "revstack/pairs.hpp"
#include "revstack/sweep.hpp"

namespace revstack::entringer
{

const BigInt &EntringerTable::at(int n, int k) const
{
  if (n < 1 || n > max_n || k < 1 || k > n)
    throw std::out_of_range("E(n, k) needs 1 <= k <= n <= max_n");
  return entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

EntringerTable entringer_table(int max_n)
{
  if (max_n < 1)
    throw std::invalid_argument("max_n must be positive");
  EntringerTable t;
  t.max_n = max_n;
  t.entries.assign(static_cast<std::size_t>(max_n) + 1, {});
  t.row_sums.assign(static_cast<std::size_t>(max_n) + 1, 0);
  for (int n = 1; n <= max_n; ++n) {
    auto &row = t.entries[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, 0);
    row[1] = n == 1 ? 1 : 0;
    for (int k = 2; k <= n; ++k)
      row[static_cast<std::size_t>(k)] =
        row[static_cast<std::size_t>(k - 1)] + t.entries[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n + 1 - k)];
    for (int k = 1; k <= n; ++k)
      t.row_sums[static_cast<std::size_t>(n)] += row[static_cast<std::size_t>(k)];
  }
  return t;
}

bool is_alternating_downup(std::span<const int> values)
{
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const bool descent = values[i] > values[i + 1];
    if (descent != (i % 2 == 0))
      return false;
  }
  return true;
}

bool is_alternating_downup(const Permutation &perm)
{
  return is_alternating_downup(perm.values());
}

namespace
{

void extend_alternating(int n, std::vector<int> &prefix, std::vector<char> &used, std::vector<Permutation> &out)
{
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Permutation::from_trusted(prefix));
    return;
  }
  const std::size_t i = prefix.size();
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)])
      continue;
    if (i > 0) {
      const bool descent = prefix.back() > v;
      if (descent != ((i - 1) % 2 == 0))
        continue;
    }
    used[static_cast<std::size_t>(v)] = 1;
    prefix.push_back(v);
    extend_alternating(n, prefix, used, out);
    prefix.pop_back();
    used[static_cast<std::size_t>(v)] = 0;
  }
}

} // namespace

std::vector<Permutation> enumerate_alternating(int n, std::optional<int> first)
{
  if (n < 0 || n > alternating_cap)
    throw std::out_of_range("alternating enumeration limited to n <= " + std::to_string(alternating_cap));
  std::vector<Permutation> out;
  std::vector<int> prefix;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  if (!first) {
    extend_alternating(n, prefix, used, out);
    return out;
  }
  if (*first < 1 || *first > n)
    return out;
  prefix.push_back(*first);
  used[static_cast<std::size_t>(*first)] = 1;
  extend_alternating(n, prefix, used, out);
  return out;
}

std::size_t MaximalTierFamily::size() const
{
  std::size_t s = 0;
  for (const auto &[k, members] : members_by_k)
    s += members.size();
  return s;
}

std::size_t MaximalTierFamily::count(int k) const
{
  auto it = members_by_k.find(k);
  return it == members_by_k.end() ? 0 : it->second.size();
}

MaximalTierFamily maximal_tier_family(int n, unsigned workers)
{
  if (n < 3 || n > family_cap)
    throw std::out_of_range("maximal_tier_family needs 3 <= n <= " + std::to_string(family_cap));
  auto hits = parallel_sweep(
    n, workers, std::vector<Permutation>{},
    [n](std::vector<Permutation> &acc, std::span<const int> values) {
      if (pairs::rev_tier(values) == n - 2)
        acc.push_back(Permutation::from_trusted(std::vector<int>(values.begin(), values.end())));
    },
    [](std::vector<Permutation> &acc, const std::vector<Permutation> &part) {
      acc.insert(acc.end(), part.begin(), part.end());
    });
  MaximalTierFamily family;
  family.n = n;
  for (auto &p : hits)
    family.members_by_k[p.position_of(1) - 1].push_back(std::move(p));
  return family;
}

Permutation bijection_f(const Permutation &pi)
{
  if (pi.empty() || !is_alternating_downup(pi))
    throw std::invalid_argument("bijection_f expects a non-empty down/up alternating permutation");
  const int m = pi.size();
  const int n = m + 1;
  const auto inv_left = inversion_profile(pi).inv_left;
  std::vector<int> sigma(static_cast<std::size_t>(n), 0);

  auto place = [&](int value, int slot) {
    int seen = 0;
    for (auto &cell : sigma) {
      if (cell != 0)
        continue;
      if (++seen == slot) {
        cell = value;
        return;
      }
    }
    throw std::logic_error("open slot " + std::to_string(slot) + " does not exist");
  };

  for (int j = 1; j <= m; ++j)
    place(j, inv_left[static_cast<std::size_t>(j - 1)] + (j % 2 == 1 ? 2 : 1));
  place(n, 1);
  return Permutation::from_trusted(std::move(sigma));
}

Permutation bijection_f_inverse(const Permutation &sigma)
{
  const int n = sigma.size();
  if (n < 2 || pairs::rev_tier(sigma.values()) != n - 2)
    throw std::invalid_argument("bijection_f_inverse expects a permutation of length n >= 2 with rev-tier n-2");
  const auto inv_right = inversion_profile(sigma).inv_right;
  std::vector<int> remaining(static_cast<std::size_t>(n - 1));
  for (int v = 1; v < n; ++v)
    remaining[static_cast<std::size_t>(v - 1)] = v;
  std::vector<int> pi;
  pi.reserve(remaining.size());
  for (int j = 1; j < n; ++j) {
    const int index = inv_right[static_cast<std::size_t>(j - 1)] + (j % 2 == 1 ? 0 : 1);
    if (index < 1 || index > static_cast<int>(remaining.size()))
      throw std::invalid_argument("permutation is outside the image of bijection_f");
    pi.push_back(remaining[static_cast<std::size_t>(index - 1)]);
    remaining.erase(remaining.begin() + (index - 1));
  }
  if (!is_alternating_downup(pi))
    throw std::invalid_argument("permutation is outside the image of bijection_f");
  return Permutation::from_trusted(std::move(pi));
}

} // namespace revstack::entringer
