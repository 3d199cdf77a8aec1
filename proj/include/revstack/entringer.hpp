#ifndef REVSTACK_ENTRINGER_HPP
#define REVSTACK_ENTRINGER_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "revstack/bigint.hpp"
#include "revstack/permutation.hpp"

namespace revstack::entringer
{

/// E(n, k): down/up alternating permutations of [n] that start with k.
struct EntringerTable
{
  int max_n = 0;
  /// entries[n][k] for 1 <= k <= n; row and column 0 unused.
  std::vector<std::vector<BigInt>> entries;
  /// row_sums[n] = E_n, the Euler (zigzag) number.
  std::vector<BigInt> row_sums;

  const BigInt &at(int n, int k) const;
};

/// Seidel-Entringer recurrence E(n, k) = E(n, k-1) + E(n-1, n+1-k).
EntringerTable entringer_table(int max_n);

/// pi_1 > pi_2 < pi_3 > ... ; lengths 0 and 1 qualify.
bool is_alternating_downup(std::span<const int> values);
bool is_alternating_downup(const Permutation &perm);

inline constexpr int alternating_cap = 11;

/// All down/up permutations of length n in lexicographic order, optionally
/// only those starting with `first`.
std::vector<Permutation> enumerate_alternating(int n, std::optional<int> first = std::nullopt);

/// Permutations of length n with rev-tier n-2, grouped by k where 1 sits at
/// position k+1.
struct MaximalTierFamily
{
  int n = 0;
  std::map<int, std::vector<Permutation>> members_by_k;

  std::size_t size() const;
  std::size_t count(int k) const;
};

inline constexpr int family_cap = 10;

MaximalTierFamily maximal_tier_family(int n, unsigned workers = 0);

/// Sends a down/up permutation of length n-1 to a maximal-tier permutation
/// of length n. For j = 1..n-1 the value j goes to open slot
/// inv_L(pi_j) + 2 (j odd) or inv_L(pi_j) + 1 (j even), counting open slots
/// from the left; n fills the last slot. Throws std::invalid_argument on
/// non-alternating input.
Permutation bijection_f(const Permutation &pi);

/// Inverse of bijection_f. For j = 1..n-1, pi_j is the inv_R(j)-th (j odd)
/// or (inv_R(j)+1)-th (j even) smallest value of {1..n-1} not yet used,
/// where inv_R is taken in sigma. Throws std::invalid_argument unless sigma
/// has rev-tier n-2.
Permutation bijection_f_inverse(const Permutation &sigma);

} // namespace revstack::entringer

#endif // REVSTACK_ENTRINGER_HPP
