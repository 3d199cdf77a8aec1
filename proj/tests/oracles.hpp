// Reference implementations used only by the tests. Nothing here calls into
// the library, so agreement with it is evidence rather than tautology.
#ifndef REVSTACK_TESTS_ORACLES_HPP
#define REVSTACK_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle
{

using Seq = std::vector<int>;

inline Seq identity(int n)
{
  Seq s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  return s;
}

/// Calls f on every permutation of 1..n via std::next_permutation.
template <class F>
void each(int n, F f)
{
  Seq s = identity(n);
  do
    f(static_cast<const Seq &>(s));
  while (std::next_permutation(s.begin(), s.end()));
}

/// Straight reading of the machine: push everything, pop only the next
/// needed value, hand the leftovers back top first.
inline int tier_by_machine(const Seq &p)
{
  Seq input = p;
  int need = 1;
  for (int passes = 1;; ++passes) {
    Seq stack;
    for (int v : input) {
      stack.push_back(v);
      while (!stack.empty() && stack.back() == need) {
        stack.pop_back();
        ++need;
      }
    }
    if (stack.empty())
      return passes - 1;
    input.assign(stack.rbegin(), stack.rend());
    if (passes > static_cast<int>(p.size()) + 1)
      return -1;
  }
}

/// 'D', 'U' or '.' for each i = 1..n-1, straight from the definition.
inline std::string orientation_string(const Seq &p)
{
  const int n = static_cast<int>(p.size());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i)
    pos[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
  std::string out;
  for (int i = 1; i < n; ++i) {
    const int a = pos[static_cast<std::size_t>(i)], b = pos[static_cast<std::size_t>(i + 1)];
    bool separated = false;
    for (int j = std::min(a, b) + 1; j < std::max(a, b); ++j)
      separated = separated || p[static_cast<std::size_t>(j)] > i + 1;
    out.push_back(!separated ? '.' : (a < b ? 'U' : 'D'));
  }
  return out;
}

/// Longest D,U,D,... subsequence over all index subsets (exponential; n <= 9).
inline int tier_by_subsets(const Seq &p)
{
  const auto o = orientation_string(p);
  const int m = static_cast<int>(o.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int len = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if (mask & (1u << i)) {
        ok = o[static_cast<std::size_t>(i)] == (len % 2 == 0 ? 'D' : 'U');
        ++len;
      }
    if (ok)
      best = std::max(best, len);
  }
  return best;
}

/// Pattern containment by trying every index subset.
inline bool contains(const Seq &host, const Seq &pattern)
{
  const int n = static_cast<int>(host.size()), k = static_cast<int>(pattern.size());
  if (k == 0)
    return true;
  if (k > n)
    return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k)
      continue;
    Seq sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i))
        sub.push_back(host[static_cast<std::size_t>(i)]);
    bool same = true;
    for (int a = 0; a < k && same; ++a)
      for (int b = 0; b < k && same; ++b)
        same = (sub[static_cast<std::size_t>(a)] < sub[static_cast<std::size_t>(b)]) ==
               (pattern[static_cast<std::size_t>(a)] < pattern[static_cast<std::size_t>(b)]);
    if (same)
      return true;
  }
  return false;
}

/// Every pattern of length <= max_k occurring in host, standardized.
inline std::set<Seq> patterns_of(const Seq &host, int max_k)
{
  const int n = static_cast<int>(host.size());
  std::set<Seq> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) > max_k)
      continue;
    Seq sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i))
        sub.push_back(host[static_cast<std::size_t>(i)]);
    Seq std_form(sub.size());
    for (std::size_t a = 0; a < sub.size(); ++a)
      std_form[a] = 1 + static_cast<int>(std::count_if(sub.begin(), sub.end(), [&](int v) { return v < sub[a]; }));
    out.insert(std_form);
  }
  return out;
}

inline Seq delete_at(const Seq &p, std::size_t i)
{
  Seq out;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (j != i)
      out.push_back(p[j] > p[i] ? p[j] - 1 : p[j]);
  return out;
}

inline std::uint64_t factorial(int n)
{
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::uint64_t binomial(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Catalan numbers from the closed form binomial(2n, n) / (n + 1).
inline std::uint64_t catalan(int n)
{
  return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1);
}

inline bool alternating(const Seq &p)
{
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if ((p[i] > p[i + 1]) != (i % 2 == 0))
      return false;
  return true;
}

/// E(n, k) by counting down/up permutations that start with k.
inline std::map<std::pair<int, int>, std::uint64_t> entringer_by_count(int max_n)
{
  std::map<std::pair<int, int>, std::uint64_t> e;
  for (int n = 1; n <= max_n; ++n)
    each(n, [&](const Seq &p) {
      if (alternating(p))
        ++e[{n, p[0]}];
    });
  return e;
}

/// Coefficients of a power series given by a function of its index, as
/// plain integers.
inline std::vector<long long> coefficients(int order, const std::function<long long(int)> &f)
{
  std::vector<long long> c;
  for (int i = 0; i <= order; ++i)
    c.push_back(f(i));
  return c;
}

} // namespace oracle

#endif // REVSTACK_TESTS_ORACLES_HPP
