#include "revstack/pairs.hpp"

#include <algorithm>
#include <stdexcept>

namespace revstack::pairs
{

namespace
{

std::vector<int> positions(std::span<const int> values)
{
  std::vector<int> pos(values.size() + 1, 0);
  for (std::size_t p = 0; p < values.size(); ++p)
    pos[static_cast<std::size_t>(values[p])] = static_cast<int>(p);
  return pos;
}

Orientation orientation_at(std::span<const int> values, const std::vector<int> &pos, int i)
{
  const int p = pos[static_cast<std::size_t>(i)];
  const int q = pos[static_cast<std::size_t>(i + 1)];
  const int lo = std::min(p, q);
  const int hi = std::max(p, q);
  for (int k = lo + 1; k < hi; ++k)
    if (values[static_cast<std::size_t>(k)] > i + 1)
      return p < q ? Orientation::Up : Orientation::Down;
  return Orientation::NotSeparated;
}

void check_index(std::size_t n, int i)
{
  if (i < 1 || static_cast<std::size_t>(i) + 1 > n)
    throw std::out_of_range("pair index " + std::to_string(i) + " outside [1, n-1]");
}

} // namespace

char to_char(Orientation o)
{
  switch (o) {
  case Orientation::Down: return 'D';
  case Orientation::Up: return 'U';
  case Orientation::NotSeparated: break;
  }
  return '.';
}

const char *to_string(PermClass c)
{
  switch (c) {
  case PermClass::N: return "N";
  case PermClass::MU: return "M_U";
  case PermClass::MD: return "M_D";
  }
  return "?";
}

Orientation pair_orientation(std::span<const int> values, int i)
{
  check_index(values.size(), i);
  return orientation_at(values, positions(values), i);
}

Orientation pair_orientation(const Permutation &perm, int i)
{
  return pair_orientation(perm.values(), i);
}

std::vector<Orientation> orientations(std::span<const int> values)
{
  std::vector<Orientation> out;
  if (values.size() < 2)
    return out;
  const auto pos = positions(values);
  const int n = static_cast<int>(values.size());
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i)
    out.push_back(orientation_at(values, pos, i));
  return out;
}

TierWitness rev_tier_by_pairs(const Permutation &perm)
{
  TierWitness result;
  Orientation want = Orientation::Down;
  const auto orient = orientations(perm.values());
  for (std::size_t i = 0; i < orient.size(); ++i) {
    if (orient[i] != want)
      continue;
    result.witness.push_back(static_cast<int>(i) + 1);
    want = want == Orientation::Down ? Orientation::Up : Orientation::Down;
  }
  result.tier = static_cast<int>(result.witness.size());
  return result;
}

int rev_tier(std::span<const int> values)
{
  const int n = static_cast<int>(values.size());
  if (n < 3)
    return 0;
  const auto pos = positions(values);
  int tier = 0;
  Orientation want = Orientation::Down;
  for (int i = 1; i < n; ++i) {
    if (orientation_at(values, pos, i) == want) {
      ++tier;
      want = want == Orientation::Down ? Orientation::Up : Orientation::Down;
    }
  }
  return tier;
}

int rev_tier_by_pairs_dp(const Permutation &perm)
{
  const auto orient = orientations(perm.values());
  // best[i]: longest alternating chain starting Down and ending at pair i,
  // 0 when no such chain ends there.
  std::vector<int> best(orient.size(), 0);
  int answer = 0;
  for (std::size_t i = 0; i < orient.size(); ++i) {
    if (orient[i] == Orientation::NotSeparated)
      continue;
    const Orientation prev = orient[i] == Orientation::Down ? Orientation::Up : Orientation::Down;
    int len = orient[i] == Orientation::Down ? 1 : 0;
    for (std::size_t j = 0; j < i; ++j)
      if (orient[j] == prev && best[j] > 0)
        len = std::max(len, best[j] + 1);
    best[i] = len;
    answer = std::max(answer, len);
  }
  return answer;
}

PermClass classify(std::span<const int> values)
{
  const int n = static_cast<int>(values.size());
  if (n < 3)
    return PermClass::N;
  const auto pos = positions(values);
  for (int i = 1; i < n; ++i) {
    switch (orientation_at(values, pos, i)) {
    case Orientation::Up: return PermClass::MU;
    case Orientation::Down: return PermClass::MD;
    case Orientation::NotSeparated: break;
    }
  }
  return PermClass::N;
}

PermClass classify(const Permutation &perm)
{
  return classify(perm.values());
}

SeparatedPairProfile profile(const Permutation &perm)
{
  SeparatedPairProfile prof;
  prof.orientations = orientations(perm.values());
  auto tw = rev_tier_by_pairs(perm);
  prof.tier = tw.tier;
  prof.witness_sequence = std::move(tw.witness);
  prof.class_label = classify(perm);
  return prof;
}

int witness_pair_from_pattern(const Permutation &perm, std::array<int, 3> occurrence, PatternKind kind)
{
  const int n = perm.size();
  for (int v : occurrence)
    if (v < 1 || v > n)
      throw std::invalid_argument("occurrence value " + std::to_string(v) + " not in the permutation");
  const auto pos = positions(perm.values());
  auto at = [&](int v) { return pos[static_cast<std::size_t>(v)]; };
  const auto [first, second, third] = occurrence;
  if (!(at(first) < at(second) && at(second) < at(third)))
    throw std::invalid_argument("occurrence values are not in left-to-right order");

  int low = 0;   // the pattern's "1"
  int mid = 0;   // the pattern's "2"
  int high = 0;  // the pattern's "3"
  if (kind == PatternKind::P132) {
    low = first, high = second, mid = third;
    if (!(low < mid && mid < high))
      throw std::invalid_argument("triple is not a 132 occurrence");
    // 132: low .. high .. mid
    while (low + 1 != mid && at(low + 1) < at(high))
      ++low;
  } else {
    mid = first, high = second, low = third;
    if (!(low < mid && mid < high))
      throw std::invalid_argument("triple is not a 231 occurrence");
    // 231: mid .. high .. low
    while (low + 1 != mid && at(low + 1) > at(high))
      ++low;
  }
  return low;
}

Permutation max_tier_witness(int n)
{
  if (n < 2)
    throw std::invalid_argument("max_tier_witness needs n >= 2");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int v = (n - 1) / 2 * 2; v >= 2; v -= 2)
    values.push_back(v);
  values.push_back(n);
  for (int v = 1; v < n; v += 2)
    values.push_back(v);
  return Permutation::from_trusted(std::move(values));
}

} // namespace revstack::pairs
