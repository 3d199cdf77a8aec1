#ifndef REVSTACK_TABLES_HPP
#define REVSTACK_TABLES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "revstack/bigint.hpp"

namespace revstack::tables
{

class CapExceeded : public std::out_of_range
{
public:
  using std::out_of_range::out_of_range;
};

enum class TableKind
{
  ExactTier,      // (n, t): permutations of length n with rev-tier exactly t
  CumulativeTier, // (n, t): rev-tier at most t
  Refined,        // (n, t, k): additionally indexed by the position k of 1
};

const char *to_string(TableKind kind);

/// Exact counts keyed by (n, t, k). Two-index tables store k = 0.
/// Missing keys read as zero.
class CountTable
{
public:
  using Key = std::array<int, 3>;

  CountTable() = default;
  CountTable(TableKind kind, int max_n)
  : _kind(kind), _max_n(max_n)
  {}

  TableKind kind() const noexcept { return _kind; }
  int max_n() const noexcept { return _max_n; }

  BigInt at(int n, int t, int k = 0) const;
  void set(int n, int t, int k, BigInt value);
  void set(int n, int t, BigInt value) { set(n, t, 0, std::move(value)); }

  /// Sum over k of the (n, t, k) entries.
  BigInt sum_k(int n, int t) const;

  /// Largest t index stored for length n, or -1 when the row is empty.
  int max_t(int n) const;

  const std::map<Key, BigInt> &entries() const noexcept { return _entries; }

  friend bool operator==(const CountTable &, const CountTable &) = default;

private:
  TableKind _kind = TableKind::ExactTier;
  int _max_n = 0;
  std::map<Key, BigInt> _entries;
};

/// Per-length statistics gathered in one exhaustive sweep of S_n.
struct LengthCensus
{
  int n = 0;
  std::vector<std::uint64_t> by_tier;                  // [t]
  std::vector<std::uint64_t> eta;                      // [k-1], class N
  std::vector<std::vector<std::uint64_t>> mu_up;       // [t][k-1], class M_U
  std::vector<std::vector<std::uint64_t>> mu_down;     // [t][k-1], class M_D

  explicit LengthCensus(int n = 0);
  void merge(const LengthCensus &other);
};

struct SweepOptions
{
  unsigned workers = 0;     // 0: default_workers()
  bool allow_large = false; // lifts the default cap by one length
  std::function<void(int n)> progress; // called before each length is swept
};

/// Default and extended length caps for exhaustive tables.
inline constexpr int default_table_cap = 10;
inline constexpr int extended_table_cap = 11;

LengthCensus census(int n, unsigned workers = 0);

/// Sweeps every length 1..max_n; shared by the table builders below.
std::vector<LengthCensus> census_up_to(int max_n, const SweepOptions &options = {});

CountTable exact_tier_table(int max_n, const SweepOptions &options = {});
CountTable exact_tier_table(const std::vector<LengthCensus> &census);
CountTable cumulative_tier_table(int max_n, const SweepOptions &options = {});
CountTable cumulative_from_exact(const CountTable &exact);

/// eta(n, k), mu_U(n, t, k) and mu_D(n, t, k); eta is keyed (n, 0, k).
struct RefinedCounts
{
  int max_n = 0;
  CountTable eta{TableKind::Refined, 0};
  CountTable mu_up{TableKind::Refined, 0};
  CountTable mu_down{TableKind::Refined, 0};

  /// f(n, t, k) = eta(n, k)[t = 0] + mu_U(n, t, k) + mu_D(n, t, k).
  BigInt f(int n, int t, int k) const;

  friend bool operator==(const RefinedCounts &, const RefinedCounts &) = default;
};

RefinedCounts refined_counts_bruteforce(int max_n, const SweepOptions &options = {});
RefinedCounts refined_counts_bruteforce(const std::vector<LengthCensus> &census);

/// Builds eta / mu_U / mu_D for lengths 1..max_n from the insertion-of-1
/// recurrences, starting at eta(1, 1) = 1.
RefinedCounts refined_counts_recurrence(int max_n);

/// binomial(n - 1, k - 1), the number of permutations with no separated
/// pair whose 1 sits at position k.
BigInt eta_closed_form(int n, int k);

} // namespace revstack::tables

#endif // REVSTACK_TABLES_HPP
