#ifndef REVSTACK_BASIS_HPP
#define REVSTACK_BASIS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "revstack/permutation.hpp"

namespace revstack::basis
{

class CapExceeded : public std::out_of_range
{
public:
  using std::out_of_range::out_of_range;
};

/// Minimal permutations outside the class {rev-tier <= tier_bound}, found by
/// searching every length up to search_bound.
struct BasisReport
{
  int tier_bound = 0;
  int search_bound = 0;
  /// Every basis element has length at most 3(t+1); below that the search
  /// may have missed longer elements.
  bool complete = false;
  /// Sorted lexicographically within each length.
  std::map<int, std::vector<Permutation>> elements_by_length;

  std::vector<Permutation> elements() const;
  std::size_t size() const;

  friend bool operator==(const BasisReport &, const BasisReport &) = default;
};

enum class Strategy
{
  Exhaustive, // scan all of S_n for each n
  Extension,  // grow class members by inserting a new maximum
};

const char *to_string(Strategy s);

/// Exhaustive for t <= 1, extension otherwise.
Strategy default_strategy(int tier_bound);

struct SearchOptions
{
  unsigned workers = 0;
  /// Lengths above 10 are refused unless set.
  bool long_running = false;
  std::function<void(int length, std::size_t members)> progress;
};

inline constexpr int default_search_cap = 10;
inline constexpr int extended_search_cap = 12;

/// Upper bound 3(t+1) on basis element length.
constexpr int length_bound(int tier_bound) { return 3 * (tier_bound + 1); }

bool is_basis_element(const Permutation &perm, int tier_bound);

BasisReport compute_basis(int tier_bound, int max_len, Strategy strategy, const SearchOptions &options = {});

bool avoids_all(std::span<const int> perm, const std::vector<Permutation> &basis);
bool avoids_all(const Permutation &perm, const std::vector<Permutation> &basis);

/// |Av(basis) ∩ S_n| for n = 0..max_n (index 0 is the empty permutation).
/// Grows the class one length at a time by inserting n+1 into members.
std::vector<std::uint64_t> enumerate_av(const std::vector<Permutation> &basis, int max_n, unsigned workers = 0);

inline constexpr int av_count_cap = 11;

} // namespace revstack::basis

#endif // REVSTACK_BASIS_HPP
