#ifndef REVSTACK_PERMUTATION_HPP
#define REVSTACK_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revstack
{

/// Failure categories reported when text or values do not describe a permutation.
enum class PermutationErrorKind
{
  DuplicateValue,
  GapInValues,
  BadToken,
  OutOfRange,
};

class PermutationError : public std::invalid_argument
{
public:
  PermutationError(PermutationErrorKind kind, const std::string &what)
  : std::invalid_argument(what), _kind(kind)
  {}

  PermutationErrorKind kind() const noexcept { return _kind; }

private:
  PermutationErrorKind _kind;
};

/// A permutation of {1..n} in one-line notation.
///
/// Values are stored 1-based as they are written. Positions are 0-based for
/// operator[] and 1-based everywhere a "position" argument appears in the
/// public API, which is how permutations are discussed in the literature.
class Permutation
{
public:
  Permutation() = default;

  /// Validates that `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
  : Permutation(std::vector<int>(values))
  {}

  static Permutation identity(int n);

  /// Skips validation; for hot loops that construct known-good values.
  static Permutation from_trusted(std::vector<int> values)
  {
    Permutation p;
    p._values = std::move(values);
    return p;
  }

  int size() const noexcept { return static_cast<int>(_values.size()); }
  bool empty() const noexcept { return _values.empty(); }

  int operator[](std::size_t index) const noexcept { return _values[index]; }

  /// Value at 1-based `position`.
  int at(int position) const;

  /// 1-based position of `value`.
  int position_of(int value) const;

  std::span<const int> values() const noexcept { return _values; }
  const std::vector<int> &vector() const noexcept { return _values; }

  auto begin() const noexcept { return _values.begin(); }
  auto end() const noexcept { return _values.end(); }

  /// Compact digits when n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b)
  {
    return a._values <=> b._values;
  }

private:
  std::vector<int> _values;
};

std::ostream &operator<<(std::ostream &os, const Permutation &perm);

/// Renders a value sequence compactly when every value is a single digit,
/// comma-separated otherwise. Empty input renders as "".
std::string format_values(std::span<const int> values);

/// Accepts compact digits ("2413", only for n <= 9) or integers separated by
/// commas and/or whitespace ("2, 4, 1, 3"). Blank text is the empty permutation.
Permutation parse_permutation(std::string_view text);

/// True if `values` is a rearrangement of 1..n.
bool is_permutation(std::span<const int> values);

/// Order-isomorphic occurrence test by backtracking.
bool contains_pattern(std::span<const int> host, std::span<const int> pattern);
bool contains_pattern(const Permutation &host, const Permutation &pattern);

/// Removes the entry at 1-based `position` and closes the gap in the values.
Permutation delete_entry(const Permutation &perm, int position);

/// Adds one to every value, then inserts 1 at 1-based `position` (1..n+1).
Permutation insert_min(const Permutation &perm, int position);

/// Inserts the value n+1 at 1-based `position` (1..n+1).
Permutation insert_max(const Permutation &perm, int position);

Permutation reverse(const Permutation &perm);

/// Group inverse: result[perm[i]] = i.
Permutation inverse(const Permutation &perm);

/// Standardizes any sequence of distinct integers to a permutation of 1..k.
Permutation standardize(std::span<const int> values);

struct InversionProfile
{
  /// inv_left[p] counts inversions whose left entry sits at position p+1.
  std::vector<int> inv_left;
  /// inv_right[v] counts inversions whose right entry is the value v+1.
  std::vector<int> inv_right;

  long long total() const;
};

InversionProfile inversion_profile(const Permutation &perm);

// Lexicographic ranking over S_n.

/// n! for 0 <= n <= 20.
std::uint64_t factorial(int n);

/// Largest n accepted by enumerate_sn.
inline constexpr int max_enumeration_length = 12;

std::uint64_t rank(const Permutation &perm);
Permutation unrank(int n, std::uint64_t rank);

/// Half-open range of lexicographic ranks [first, last).
struct RankRange
{
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

/// Splits [0, n!) into `parts` contiguous ranges (some may be empty).
std::vector<RankRange> partition_ranks(int n, unsigned parts);

/// Visits S_n in lexicographic order, restricted to `range` when given.
/// The callback receives the raw value sequence; it is reused between calls.
void for_each_permutation(int n, std::optional<RankRange> range,
                          const std::function<void(std::span<const int>)> &visit);

/// Materialized form of for_each_permutation, for small n.
std::vector<Permutation> enumerate_sn(int n, std::optional<RankRange> range = std::nullopt);

} // namespace revstack

template <>
struct std::hash<revstack::Permutation>
{
  std::size_t operator()(const revstack::Permutation &p) const noexcept
  {
    std::size_t h = 0;
    for (int v : p)
      h = h * 31 + static_cast<std::size_t>(v);
    return h;
  }
};

#endif // REVSTACK_PERMUTATION_HPP
