#include "revstack/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace revstack
{

namespace
{

void validate(std::span<const int> values)
{
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  bool gap = false;
  for (int v : values) {
    if (v >= 1 && v <= n) {
      if (seen[v])
        throw PermutationError(PermutationErrorKind::DuplicateValue,
                               "duplicate value " + std::to_string(v));
      seen[v] = 1;
    } else {
      gap = true;
    }
  }
  // A value outside 1..n that repeats is still reported as a duplicate.
  if (gap) {
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw PermutationError(PermutationErrorKind::DuplicateValue,
                             "duplicate value " + std::to_string(*dup));
    for (int v = 1; v <= n; ++v)
      if (!seen[v])
        throw PermutationError(PermutationErrorKind::GapInValues,
                               "value " + std::to_string(v) + " is missing");
  }
}

void check_position(int position, int lo, int hi)
{
  if (position < lo || position > hi)
    throw PermutationError(PermutationErrorKind::OutOfRange,
                           "position " + std::to_string(position) + " outside [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

bool match_from(std::span<const int> host, std::span<const int> pattern,
                std::vector<int> &chosen, std::size_t host_from)
{
  const std::size_t k = chosen.size();
  if (k == pattern.size())
    return true;
  const std::size_t needed = pattern.size() - k;
  for (std::size_t h = host_from; h + needed <= host.size(); ++h) {
    const int v = host[h];
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j)
      ok = (pattern[j] < pattern[k]) == (host[chosen[j]] < v);
    if (!ok)
      continue;
    chosen.push_back(static_cast<int>(h));
    if (match_from(host, pattern, chosen, h + 1))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

Permutation::Permutation(std::vector<int> values)
: _values(std::move(values))
{
  validate(_values);
}

Permutation Permutation::identity(int n)
{
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return from_trusted(std::move(v));
}

int Permutation::at(int position) const
{
  check_position(position, 1, size());
  return _values[static_cast<std::size_t>(position - 1)];
}

int Permutation::position_of(int value) const
{
  auto it = std::find(_values.begin(), _values.end(), value);
  if (it == _values.end())
    throw PermutationError(PermutationErrorKind::OutOfRange,
                           "value " + std::to_string(value) + " not present");
  return static_cast<int>(it - _values.begin()) + 1;
}

std::string Permutation::to_string() const
{
  return format_values(_values);
}

std::string format_values(std::span<const int> values)
{
  std::string out;
  const bool compact = std::all_of(values.begin(), values.end(), [](int v) { return v >= 0 && v <= 9; });
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (compact) {
      out.push_back(static_cast<char>('0' + values[i]));
      continue;
    }
    if (i)
      out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &perm)
{
  return os << perm.to_string();
}

Permutation parse_permutation(std::string_view text)
{
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };

  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return Permutation{};
  auto last = text.find_last_not_of(" \t\r\n");
  text = text.substr(first, last - first + 1);

  std::vector<int> values;
  if (std::none_of(text.begin(), text.end(), is_sep)) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw PermutationError(PermutationErrorKind::BadToken,
                               std::string("unexpected character '") + c + "'");
      values.push_back(c - '0');
    }
    if (values.size() > 9)
      throw PermutationError(PermutationErrorKind::BadToken,
                             "compact notation is limited to n <= 9; separate values with commas");
    return Permutation(std::move(values));
  }

  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i]))
      ++i;
    if (i == text.size())
      break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j]))
      ++j;
    std::string_view token = text.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw PermutationError(PermutationErrorKind::BadToken,
                             "not an integer: '" + std::string(token) + "'");
    values.push_back(value);
    i = j;
  }
  return Permutation(std::move(values));
}

bool is_permutation(std::span<const int> values)
{
  try {
    validate(values);
    return true;
  } catch (const PermutationError &) {
    return false;
  }
}

bool contains_pattern(std::span<const int> host, std::span<const int> pattern)
{
  if (pattern.size() > host.size())
    return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return match_from(host, pattern, chosen, 0);
}

bool contains_pattern(const Permutation &host, const Permutation &pattern)
{
  return contains_pattern(host.values(), pattern.values());
}

Permutation delete_entry(const Permutation &perm, int position)
{
  check_position(position, 1, perm.size());
  const int removed = perm.at(position);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(perm.size()) - 1);
  for (int i = 0; i < perm.size(); ++i) {
    if (i == position - 1)
      continue;
    const int v = perm[static_cast<std::size_t>(i)];
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation::from_trusted(std::move(out));
}

Permutation insert_min(const Permutation &perm, int position)
{
  check_position(position, 1, perm.size() + 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(perm.size()) + 1);
  for (int v : perm)
    out.push_back(v + 1);
  out.insert(out.begin() + (position - 1), 1);
  return Permutation::from_trusted(std::move(out));
}

Permutation insert_max(const Permutation &perm, int position)
{
  check_position(position, 1, perm.size() + 1);
  std::vector<int> out(perm.begin(), perm.end());
  out.insert(out.begin() + (position - 1), perm.size() + 1);
  return Permutation::from_trusted(std::move(out));
}

Permutation reverse(const Permutation &perm)
{
  return Permutation::from_trusted(std::vector<int>(perm.vector().rbegin(), perm.vector().rend()));
}

Permutation inverse(const Permutation &perm)
{
  std::vector<int> out(static_cast<std::size_t>(perm.size()));
  for (int i = 0; i < perm.size(); ++i)
    out[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] = i + 1;
  return Permutation::from_trusted(std::move(out));
}

Permutation standardize(std::span<const int> values)
{
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PermutationError(PermutationErrorKind::DuplicateValue, "cannot standardize repeated values");
  std::vector<int> out;
  out.reserve(values.size());
  for (int v : values)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return Permutation::from_trusted(std::move(out));
}

long long InversionProfile::total() const
{
  return std::accumulate(inv_left.begin(), inv_left.end(), 0LL);
}

InversionProfile inversion_profile(const Permutation &perm)
{
  const auto n = static_cast<std::size_t>(perm.size());
  InversionProfile prof{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[i] > perm[j]) {
        ++prof.inv_left[i];
        ++prof.inv_right[static_cast<std::size_t>(perm[j] - 1)];
      }
  return prof;
}

std::uint64_t factorial(int n)
{
  if (n < 0 || n > 20)
    throw std::out_of_range("factorial argument outside [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(const Permutation &perm)
{
  const int n = perm.size();
  if (n > 20)
    throw std::out_of_range("rank is limited to n <= 20");
  std::uint64_t r = 0;
  // Lehmer code: count smaller entries to the right.
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      smaller += perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)];
    r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return r;
}

Permutation unrank(int n, std::uint64_t r)
{
  if (n < 0 || n > 20)
    throw std::out_of_range("unrank is limited to 0 <= n <= 20");
  if (r >= factorial(n))
    throw std::out_of_range("rank " + std::to_string(r) + " outside [0, " +
                            std::to_string(factorial(n)) + ")");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto digit = static_cast<std::size_t>(r / f);
    r %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation::from_trusted(std::move(out));
}

std::vector<RankRange> partition_ranks(int n, unsigned parts)
{
  parts = std::max(parts, 1u);
  const std::uint64_t total = factorial(n);
  std::vector<RankRange> out;
  out.reserve(parts);
  for (unsigned p = 0; p < parts; ++p)
    out.push_back({total * p / parts, total * (p + 1) / parts});
  return out;
}

void for_each_permutation(int n, std::optional<RankRange> range,
                          const std::function<void(std::span<const int>)> &visit)
{
  if (n < 0 || n > max_enumeration_length)
    throw std::out_of_range("enumeration length must lie in [0, " +
                            std::to_string(max_enumeration_length) + "]");
  const std::uint64_t total = factorial(n);
  RankRange r = range.value_or(RankRange{0, total});
  if (r.first > r.last || r.last > total)
    throw std::out_of_range("rank range outside [0, n!)");
  if (r.first == r.last)
    return;
  std::vector<int> values = unrank(n, r.first).vector();
  for (std::uint64_t k = r.first; k < r.last; ++k) {
    visit(values);
    std::next_permutation(values.begin(), values.end());
  }
}

std::vector<Permutation> enumerate_sn(int n, std::optional<RankRange> range)
{
  std::vector<Permutation> out;
  for_each_permutation(n, range, [&](std::span<const int> v) {
    out.push_back(Permutation::from_trusted(std::vector<int>(v.begin(), v.end())));
  });
  return out;
}

} // namespace revstack
