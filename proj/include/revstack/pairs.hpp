#ifndef REVSTACK_PAIRS_HPP
#define REVSTACK_PAIRS_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "revstack/permutation.hpp"

namespace revstack::pairs
{

/// Orientation of the consecutive values (i, i+1).
///
/// The pair is separated when some value larger than i+1 sits strictly
/// between them. It is Up when i comes first and Down when i+1 comes first.
enum class Orientation
{
  NotSeparated,
  Down,
  Up,
};

char to_char(Orientation o); // '.', 'D', 'U'

/// N: no separated pair. MU / MD: the smallest separated pair is Up / Down.
enum class PermClass
{
  N,
  MU,
  MD,
};

const char *to_string(PermClass c);

Orientation pair_orientation(std::span<const int> values, int i);
Orientation pair_orientation(const Permutation &perm, int i);

/// Orientation of every pair; entry i-1 describes (i, i+1).
std::vector<Orientation> orientations(std::span<const int> values);

struct TierWitness
{
  int tier = 0;
  /// Lower indices i of the chosen pairs; orientations alternate D, U, D, ...
  std::vector<int> witness;
};

/// Longest alternating run of separated pairs starting Down, by a greedy
/// left-to-right scan of the orientation string.
TierWitness rev_tier_by_pairs(const Permutation &perm);

/// Same as rev_tier_by_pairs without building a witness.
int rev_tier(std::span<const int> values);

/// Dynamic programme over all alternating subsequences. Slower, independent
/// of the greedy scan, kept as a cross-check.
int rev_tier_by_pairs_dp(const Permutation &perm);

PermClass classify(std::span<const int> values);
PermClass classify(const Permutation &perm);

struct SeparatedPairProfile
{
  std::vector<Orientation> orientations;
  int tier = 0;
  PermClass class_label = PermClass::N;
  std::vector<int> witness_sequence;
};

SeparatedPairProfile profile(const Permutation &perm);

enum class PatternKind
{
  P231,
  P132,
};

/// Given an occurrence of 231 (or 132), listed as its three values in
/// left-to-right order, walks towards a Down (resp. Up) separated pair
/// (i, i+1) whose i lies between the occurrence's smallest value and the
/// value playing the "2". Returns i. Throws std::invalid_argument when the
/// triple is not an occurrence of the requested kind.
int witness_pair_from_pattern(const Permutation &perm, std::array<int, 3> occurrence, PatternKind kind);

/// A length-n permutation of rev-tier n-2: the even values below n in
/// decreasing order, then n, then the odd values below n in increasing order.
Permutation max_tier_witness(int n);

} // namespace revstack::pairs

#endif // REVSTACK_PAIRS_HPP
