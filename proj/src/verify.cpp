#include "revstack/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "revstack/basis.hpp"
#include "revstack/entringer.hpp"
#include "revstack/pairs.hpp"
#include "revstack/permutation.hpp"
#include "revstack/series.hpp"
#include "revstack/sorter.hpp"
#include "revstack/sweep.hpp"
#include "revstack/tables.hpp"

namespace revstack::verify
{

namespace
{

// Rev-tier at most t, lengths 1..10, columns t = 0..n-2.
const std::vector<std::vector<long long>> cumulative_reference = {
  {1},
  {2},
  {5, 6},
  {14, 22, 24},
  {42, 89, 115, 120},
  {132, 380, 608, 704, 720},
  {429, 1678, 3380, 4558, 4979, 5040},
  {1430, 7584, 19288, 31128, 37946, 40048, 40320},
  {4862, 34875, 111720, 218287, 306307, 349654, 361495, 362880},
  {16796, 162560, 653426, 1549986, 2547042, 3244686, 3546688, 3620864, 3628800},
};

const std::vector<std::string> b1_reference = {"2413", "2431", "23154"};
const std::vector<std::string> b2_reference = {"24153",  "24513",  "24531",  "42513",  "42531",  "231564",
                                               "261453", "523164", "562413", "562431", "6723154"};

// Leading coefficients of the up-oriented series, from x^0.
const std::vector<long long> mu0_reference = {0, 0, 0, 1, 6, 26, 100, 365};
const std::vector<long long> mu1_reference = {0, 0, 0, 0, 2, 21, 148, 884, 4852, 25407, 129480, 649576};
const std::vector<long long> mu2_reference = {0, 0, 0, 0, 0, 10, 160, 1636, 13704, 102876, 722772, 4867904};
const std::vector<long long> tier2_reference = {0, 0, 0, 0, 2, 26, 228, 1702};

class Runner
{
public:
  Runner(std::string suite, const VerifyOptions &options, std::vector<CheckResult> &out)
  : _suite(std::move(suite)), _options(options), _out(out)
  {}

  void check(const std::string &name, bool passed, const std::string &detail = {})
  {
    _out.push_back({_suite, name, passed, passed ? std::string{} : detail});
    if (_options.on_result)
      _options.on_result(_out.back());
  }

  int max_n() const { return _options.max_n; }
  unsigned workers() const { return _options.workers; }

private:
  std::string _suite;
  const VerifyOptions &_options;
  std::vector<CheckResult> &_out;
};

std::vector<Permutation> parse_all(const std::vector<std::string> &texts)
{
  std::vector<Permutation> out;
  for (const auto &t : texts)
    out.push_back(parse_permutation(t));
  return out;
}

template <class T>
std::string mismatch(const std::string &where, const T &got, const T &want)
{
  std::ostringstream os;
  os << where << ": got " << got << ", expected " << want;
  return os.str();
}

/// Subsequence test over all index subsets; independent of contains_pattern.
bool naive_contains(std::span<const int> host, std::span<const int> pattern)
{
  const int n = static_cast<int>(host.size());
  const int k = static_cast<int>(pattern.size());
  if (k == 0)
    return true;
  std::vector<int> sub(static_cast<std::size_t>(k));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k)
      continue;
    for (int i = 0, j = 0; i < n; ++i)
      if (mask & (1u << i))
        sub[static_cast<std::size_t>(j++)] = host[static_cast<std::size_t>(i)];
    bool same = true;
    for (int a = 0; a < k && same; ++a)
      for (int b = a + 1; b < k && same; ++b)
        same = (sub[static_cast<std::size_t>(a)] < sub[static_cast<std::size_t>(b)]) ==
               (pattern[static_cast<std::size_t>(a)] < pattern[static_cast<std::size_t>(b)]);
    if (same)
      return true;
  }
  return false;
}

std::string first_failure(int n, std::span<const int> values, const std::string &what)
{
  return "n=" + std::to_string(n) + " " + format_values(values) + ": " + what;
}

// -- permcore ---------------------------------------------------------------

void permcore_suite(Runner &r)
{
  r.check("parse compact", parse_permutation("2413") == Permutation{2, 4, 1, 3});
  r.check("parse separated", parse_permutation("2, 4, 1, 3") == Permutation{2, 4, 1, 3});
  bool dup = false;
  try {
    parse_permutation("2414");
  } catch (const PermutationError &e) {
    dup = e.kind() == PermutationErrorKind::DuplicateValue;
  }
  r.check("parse rejects duplicates", dup);

  r.check("contains 231 in 4127356", contains_pattern(Permutation{4, 1, 2, 7, 3, 5, 6}, Permutation{2, 3, 1}));
  r.check("avoids 321 in 4127356", !contains_pattern(Permutation{4, 1, 2, 7, 3, 5, 6}, Permutation{3, 2, 1}));

  const int small = std::min(r.max_n(), 7);
  std::string failure;
  for (int n = 0; n <= small && failure.empty(); ++n) {
    std::vector<std::vector<Permutation>> patterns;
    for (int k = 1; k <= std::min(n, 4); ++k)
      patterns.push_back(enumerate_sn(k));
    for (const auto &p : enumerate_sn(n)) {
      for (const auto &group : patterns)
        for (const auto &q : group)
          if (contains_pattern(p, q) != naive_contains(p.values(), q.values())) {
            failure = first_failure(n, p.values(), "pattern " + q.to_string());
            break;
          }
      for (int i = 1; i <= n + 1 && failure.empty(); ++i)
        if (delete_entry(insert_min(p, i), i) != p)
          failure = first_failure(n, p.values(), "insert_min/delete_entry at " + std::to_string(i));
      if (!failure.empty())
        break;
      if (unrank(n, rank(p)) != p)
        failure = first_failure(n, p.values(), "rank/unrank");
      const auto prof = inversion_profile(p);
      long long left = 0, right = 0;
      for (int v : prof.inv_left)
        left += v;
      for (int v : prof.inv_right)
        right += v;
      if (left != right || prof.total() != inversion_profile(inverse(p)).total())
        failure = first_failure(n, p.values(), "inversion totals");
      if (!failure.empty())
        break;
    }
  }
  r.check("containment, round trips and inversions for n <= " + std::to_string(small), failure.empty(), failure);

  failure.clear();
  for (int n = 0; n <= std::min(r.max_n(), 9) && failure.empty(); ++n) {
    std::uint64_t count = 0;
    std::optional<std::vector<int>> previous;
    bool ordered = true;
    for (const auto &range : partition_ranks(n, 3))
      for_each_permutation(n, range, [&](std::span<const int> v) {
        std::vector<int> cur(v.begin(), v.end());
        if (previous && !(*previous < cur))
          ordered = false;
        previous = std::move(cur);
        ++count;
      });
    if (count != factorial(n) || !ordered)
      failure = "n=" + std::to_string(n) + ": " + std::to_string(count) + " permutations";
  }
  r.check("rank ranges partition S_n in lexicographic order", failure.empty(), failure);
}

// -- sorter -----------------------------------------------------------------

void sorter_suite(Runner &r)
{
  const auto p1 = sorter::single_pass(std::vector<int>{2, 4, 1, 3}, 1);
  r.check("single pass 2413", p1.emitted == std::vector<int>{1} && p1.residual_input == std::vector<int>{3, 4, 2} &&
                                p1.next_needed == 2);
  const auto p2 = sorter::single_pass(std::vector<int>{3, 4, 2}, 2);
  r.check("single pass 342", p2.emitted == std::vector<int>{2} && p2.residual_input == std::vector<int>{4, 3});
  r.check("231 has tier 1", sorter::rev_tier_by_simulation(Permutation{2, 3, 1}).tier == 1);
  const auto t = sorter::rev_tier_by_simulation(Permutation{2, 4, 1, 3});
  r.check("2413 needs three passes", t.tier == 2 && t.passes.size() == 3 && t.sorted);
  r.check("machine 2413 with 3 stacks", sorter::series_machine_sort(Permutation{2, 4, 1, 3}, 3).sorted);
  r.check("machine 2413 with 2 stacks fails", !sorter::series_machine_sort(Permutation{2, 4, 1, 3}, 2).sorted);

  std::string failure;
  for (int n = 1; n <= std::min(r.max_n(), 10) && failure.empty(); ++n) {
    auto bad = parallel_sweep(
      n, r.workers(), std::optional<std::vector<int>>{},
      [](std::optional<std::vector<int>> &acc, std::span<const int> v) {
        if (acc)
          return;
        int sim = -1;
        try {
          sim = sorter::simulated_tier(v);
        } catch (const std::logic_error &) {
        }
        if (sim != pairs::rev_tier(v))
          acc = std::vector<int>(v.begin(), v.end());
      },
      [](std::optional<std::vector<int>> &acc, const std::optional<std::vector<int>> &part) {
        if (!acc && part)
          acc = part;
      });
    if (bad)
      failure = first_failure(n, *bad, "simulation disagrees with pair tier or stalls");
  }
  r.check("simulation tier = pair tier, every pass makes progress, n <= " + std::to_string(std::min(r.max_n(), 10)),
          failure.empty(), failure);

  failure.clear();
  const int machine_n = std::min(r.max_n(), 8);
  for (int n = 1; n <= machine_n && failure.empty(); ++n) {
    auto bad = parallel_sweep(
      n, r.workers(), std::optional<std::string>{},
      [n](std::optional<std::string> &acc, std::span<const int> v) {
        if (acc)
          return;
        const auto perm = Permutation::from_trusted(std::vector<int>(v.begin(), v.end()));
        const auto identity = Permutation::identity(n);
        const int tier = pairs::rev_tier(v);
        for (int k = 1; k <= n; ++k) {
          const auto res = sorter::series_machine_sort(perm, k);
          if (res.sorted != (tier <= k - 1)) {
            acc = first_failure(n, v, std::to_string(k) + " stacks");
            return;
          }
          for (const auto &step : res.trace) {
            std::vector<int> all = step.state.input;
            all.insert(all.end(), step.state.output.begin(), step.state.output.end());
            for (const auto &s : step.state.stacks)
              all.insert(all.end(), s.begin(), s.end());
            std::sort(all.begin(), all.end());
            if (all != identity.vector()) {
              acc = first_failure(n, v, "values not conserved");
              return;
            }
          }
        }
      },
      [](std::optional<std::string> &acc, const std::optional<std::string> &part) {
        if (!acc && part)
          acc = part;
      });
    if (bad)
      failure = *bad;
  }
  r.check("k stacks in series sort iff tier <= k-1, n <= " + std::to_string(machine_n), failure.empty(), failure);
}

// -- pairs ------------------------------------------------------------------

void pairs_suite(Runner &r)
{
  using pairs::Orientation;
  r.check("(1,2) in 2413 is Down", pairs::pair_orientation(Permutation{2, 4, 1, 3}, 1) == Orientation::Down);
  r.check("(2,3) in 2413 is Up", pairs::pair_orientation(Permutation{2, 4, 1, 3}, 2) == Orientation::Up);
  r.check("tier 426135 = 4", pairs::rev_tier_by_pairs(Permutation{4, 2, 6, 1, 3, 5}).tier == 4);
  r.check("classify 132 / 231", pairs::classify(Permutation{1, 3, 2}) == pairs::PermClass::MU &&
                                  pairs::classify(Permutation{2, 3, 1}) == pairs::PermClass::MD &&
                                  pairs::classify(Permutation{1, 2, 3}) == pairs::PermClass::N);

  std::string failure;
  for (int n = 2; n <= 12 && failure.empty(); ++n) {
    const auto w = pairs::max_tier_witness(n);
    if (pairs::rev_tier(w.values()) != n - 2)
      failure = first_failure(n, w.values(), "max tier witness");
  }
  r.check("max tier witness has tier n-2 for n <= 12", failure.empty(), failure);

  const int top = std::min(r.max_n(), 10);
  const Permutation p231{2, 3, 1}, p132{1, 3, 2};
  failure.clear();
  for (int n = 1; n <= top && failure.empty(); ++n) {
    auto bad = parallel_sweep(
      n, r.workers(), std::optional<std::string>{},
      [n, &p231, &p132](std::optional<std::string> &acc, std::span<const int> v) {
        if (acc)
          return;
        const auto perm = Permutation::from_trusted(std::vector<int>(v.begin(), v.end()));
        const int greedy = pairs::rev_tier(v);
        if (greedy != pairs::rev_tier_by_pairs_dp(perm) || greedy != pairs::rev_tier_by_pairs(perm).tier) {
          acc = first_failure(n, v, "greedy vs dp");
          return;
        }
        if (greedy > std::max(n - 2, 0)) {
          acc = first_failure(n, v, "tier above n-2");
          return;
        }
        const auto orient = pairs::orientations(v);
        const bool down = std::find(orient.begin(), orient.end(), Orientation::Down) != orient.end();
        const bool up = std::find(orient.begin(), orient.end(), Orientation::Up) != orient.end();
        if (n <= 8 && (down != contains_pattern(v, p231.values()) || up != contains_pattern(v, p132.values()))) {
          acc = first_failure(n, v, "231/132 vs orientation");
          return;
        }
        const auto cls = pairs::classify(v);
        const int k = perm.position_of(1);
        if ((cls == pairs::PermClass::MU && k >= n - 1) || (cls == pairs::PermClass::MD && k <= 2)) {
          acc = first_failure(n, v, "position of 1 impossible for its class");
          return;
        }
        if (cls == pairs::PermClass::MU) {
          const auto rev = reverse(perm);
          if (pairs::classify(rev) != pairs::PermClass::MD || pairs::rev_tier(rev.values()) != greedy + 1 ||
              rev.position_of(1) != n - k + 1) {
            acc = first_failure(n, v, "reversal");
            return;
          }
        }
        if (n <= 8)
          for (int pos = 1; pos <= n; ++pos)
            if (pairs::rev_tier(delete_entry(perm, pos).values()) > greedy) {
              acc = first_failure(n, v, "deletion raised the tier");
              return;
            }
      },
      [](std::optional<std::string> &acc, const std::optional<std::string> &part) {
        if (!acc && part)
          acc = part;
      });
    if (bad)
      failure = *bad;
  }
  r.check("greedy = dp, pattern links, class positions, reversal, monotonicity, n <= " + std::to_string(top),
          failure.empty(), failure);

  const Permutation host{3, 5, 1, 4, 2};
  const int i = pairs::witness_pair_from_pattern(host, {3, 5, 4}, pairs::PatternKind::P132);
  r.check("witness from 132 occurrence in 35142", i == 3 && pairs::pair_orientation(host, i) == Orientation::Up);
}

// -- tables -----------------------------------------------------------------

void tables_suite(Runner &r)
{
  const int top = std::min(r.max_n(), tables::default_table_cap);
  tables::SweepOptions sweep;
  sweep.workers = r.workers();
  const auto census = tables::census_up_to(top, sweep);
  const auto exact = tables::exact_tier_table(census);
  const auto cumulative = tables::cumulative_from_exact(exact);

  std::string failure;
  for (int n = 1; n <= top && failure.empty(); ++n) {
    BigInt sum = 0;
    for (int t = 0; t <= std::max(n - 2, 0); ++t)
      sum += exact.at(n, t);
    if (sum != factorial(n))
      failure = mismatch("row " + std::to_string(n) + " sum", sum, BigInt(factorial(n)));
  }
  r.check("exact rows sum to n!", failure.empty(), failure);

  failure.clear();
  for (int n = 1; n <= top && failure.empty(); ++n) {
    const auto &row = cumulative_reference[static_cast<std::size_t>(n - 1)];
    for (int t = 0; t < std::max(top - 1, 1); ++t) {
      const BigInt want = t < static_cast<int>(row.size()) ? BigInt(row[static_cast<std::size_t>(t)]) : BigInt(factorial(n));
      if (cumulative.at(n, t) != want) {
        failure = mismatch("(" + std::to_string(n) + ", t<=" + std::to_string(t) + ")", cumulative.at(n, t), want);
        break;
      }
      if (t > 0 && t < static_cast<int>(row.size()) &&
          exact.at(n, t) != want - BigInt(row[static_cast<std::size_t>(t - 1)])) {
        failure = mismatch("(" + std::to_string(n) + ", t=" + std::to_string(t) + ")", exact.at(n, t),
                           BigInt(want - BigInt(row[static_cast<std::size_t>(t - 1)])));
        break;
      }
    }
  }
  r.check("cumulative table and its differences match reference, n <= " + std::to_string(top), failure.empty(),
          failure);

  const auto brute = tables::refined_counts_bruteforce(census);
  const auto recurrence = tables::refined_counts_recurrence(top);
  r.check("recurrence = brute force refined counts, n <= " + std::to_string(top), brute == recurrence);

  failure.clear();
  for (int n = 1; n <= top && failure.empty(); ++n)
    for (int t = 0; t <= std::max(n - 2, 0); ++t) {
      BigInt s = 0;
      for (int k = 1; k <= n; ++k)
        s += brute.f(n, t, k);
      if (s != exact.at(n, t)) {
        failure = mismatch("f summed over k at (" + std::to_string(n) + "," + std::to_string(t) + ")", s, exact.at(n, t));
        break;
      }
    }
  r.check("f(n,t,k) decomposition sums to the exact table", failure.empty(), failure);

  const int deep = 12;
  const auto rec = tables::refined_counts_recurrence(deep);
  failure.clear();
  for (int n = 1; n <= deep && failure.empty(); ++n) {
    BigInt eta_sum = 0;
    for (int k = 1; k <= n; ++k) {
      eta_sum += rec.eta.at(n, 0, k);
      if (rec.eta.at(n, 0, k) != tables::eta_closed_form(n, k))
        failure = "eta closed form at (" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
    if (eta_sum != BigInt(1) << (n - 1))
      failure = "eta row sum at n=" + std::to_string(n);
    for (int t = 0; t <= n && failure.empty(); ++t) {
      if (rec.mu_up.at(n, t, n) != 0 || (n >= 2 && rec.mu_up.at(n, t, n - 1) != 0) || rec.mu_down.at(n, t, 1) != 0 ||
          (n >= 2 && rec.mu_down.at(n, t, 2) != 0))
        failure = "forbidden 1-positions at (" + std::to_string(n) + "," + std::to_string(t) + ")";
      BigInt up = 0, down = 0;
      for (int k = 1; k <= n; ++k) {
        up += rec.mu_up.at(n, t, k);
        down += rec.mu_down.at(n, t + 1, k);
        if (rec.mu_up.at(n, t, k) != rec.mu_down.at(n, t + 1, n - k + 1))
          failure = "reversal identity at (" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(k) + ")";
      }
      if (up != down)
        failure = "class sums at (" + std::to_string(n) + "," + std::to_string(t) + ")";
      if (t >= 1 && n >= 3) {
        BigInt s = 0;
        for (int m = 1; m <= n - 1; ++m)
          s += rec.mu_down.at(m, t, m);
        if (rec.mu_up.at(n, t, n - 2) != s)
          failure = "mu_U(n,t,n-2) identity at (" + std::to_string(n) + "," + std::to_string(t) + ")";
      }
    }
  }
  r.check("recurrence count identities, n <= 12", failure.empty(), failure);
}

// -- basis ------------------------------------------------------------------

void basis_suite(Runner &r)
{
  basis::SearchOptions opt;
  opt.workers = r.workers();

  r.check("2413 in B1, 24153 in B2, 3241 not in B1",
          basis::is_basis_element(Permutation{2, 4, 1, 3}, 1) && basis::is_basis_element(Permutation{2, 4, 1, 5, 3}, 2) &&
            !basis::is_basis_element(Permutation{3, 2, 4, 1}, 1));

  const auto b1 = basis::compute_basis(1, 6, basis::Strategy::Exhaustive, opt);
  r.check("B1 = {2413, 2431, 23154}, complete", b1.elements() == parse_all(b1_reference) && b1.complete);

  const int len = std::min(r.max_n(), 9);
  const auto b2 = basis::compute_basis(2, len, basis::Strategy::Extension, opt);
  std::vector<Permutation> b2_want;
  for (const auto &p : parse_all(b2_reference))
    if (p.size() <= len)
      b2_want.push_back(p);
  r.check("B2 through length " + std::to_string(len), b2.elements() == b2_want);

  const int cross = std::min(r.max_n(), 8);
  const auto b2_ex = basis::compute_basis(2, cross, basis::Strategy::Exhaustive, opt);
  const auto b2_ext = basis::compute_basis(2, cross, basis::Strategy::Extension, opt);
  r.check("exhaustive = extension for t = 2, length <= " + std::to_string(cross), b2_ex == b2_ext);

  if (r.max_n() >= 9) {
    const auto b3 = basis::compute_basis(3, 9, basis::Strategy::Extension, opt);
    bool valid = !b3.complete && b3 == basis::compute_basis(3, 9, basis::Strategy::Exhaustive, opt);
    for (const auto &p : b3.elements())
      valid = valid && basis::is_basis_element(p, 3);
    r.check("B3 through length 9: strategies agree, elements minimal, report incomplete", valid);
    const auto counts = basis::enumerate_av(b3.elements(), 9, r.workers());
    std::string failure;
    for (int n = 1; n <= 9 && failure.empty(); ++n) {
      const auto &row = cumulative_reference[static_cast<std::size_t>(n - 1)];
      const auto want = static_cast<std::uint64_t>(row.size() > 3 ? row[3] : row.back());
      if (counts[static_cast<std::size_t>(n)] != want)
        failure = mismatch("|Av(B3)| at n=" + std::to_string(n), counts[static_cast<std::size_t>(n)], want);
    }
    r.check("Av(B3 through length 9) matches the t<=3 column, n <= 9", failure.empty(), failure);
  }

  const auto b1_set = parse_all(b1_reference);
  const auto b2_set = parse_all(b2_reference);
  std::string failure;
  for (int n = 1; n <= cross && failure.empty(); ++n) {
    auto bad = parallel_sweep(
      n, r.workers(), std::optional<std::string>{},
      [&, n](std::optional<std::string> &acc, std::span<const int> v) {
        if (acc)
          return;
        const int t = pairs::rev_tier(v);
        if ((t <= 1) != basis::avoids_all(v, b1_set) || (t <= 2) != basis::avoids_all(v, b2_set))
          acc = first_failure(n, v, "class membership vs basis avoidance");
      },
      [](std::optional<std::string> &acc, const std::optional<std::string> &part) {
        if (!acc && part)
          acc = part;
      });
    if (bad)
      failure = *bad;
  }
  r.check("tier <= t iff avoiding B_t (t = 1, 2), n <= " + std::to_string(cross), failure.empty(), failure);

  const int wilf = std::min(r.max_n(), basis::av_count_cap);
  const auto a = basis::enumerate_av(parse_all({"4321", "4213"}), wilf, r.workers());
  const auto b = basis::enumerate_av(b1_set, wilf, r.workers());
  failure.clear();
  for (int n = 1; n <= std::min(wilf, 10); ++n) {
    const auto want = static_cast<std::uint64_t>(cumulative_reference[static_cast<std::size_t>(n - 1)].size() > 1
                                                    ? cumulative_reference[static_cast<std::size_t>(n - 1)][1]
                                                    : cumulative_reference[static_cast<std::size_t>(n - 1)][0]);
    if (a[static_cast<std::size_t>(n)] != want || b[static_cast<std::size_t>(n)] != want)
      failure = "n=" + std::to_string(n);
  }
  r.check("Av(4321,4213) and Av(B1) match the t<=1 column, n <= " + std::to_string(std::min(wilf, 10)),
          failure.empty(), failure);
}

// -- entringer --------------------------------------------------------------

void entringer_suite(Runner &r)
{
  const auto e = entringer::entringer_table(12);
  r.check("E(5, .) = 0 2 4 5 5", e.at(5, 1) == 0 && e.at(5, 2) == 2 && e.at(5, 3) == 4 && e.at(5, 4) == 5 &&
                                    e.at(5, 5) == 5 && e.row_sums[5] == 16);
  r.check("|alternating(5)| = 16", entringer::enumerate_alternating(5).size() == 16);
  r.check("f(21534) = 241653",
          entringer::bijection_f(Permutation{2, 1, 5, 3, 4}) == Permutation{2, 4, 1, 6, 5, 3});
  r.check("finv(6247153) = 426351",
          entringer::bijection_f_inverse(Permutation{6, 2, 4, 7, 1, 5, 3}) == Permutation{4, 2, 6, 3, 5, 1});

  const int top = std::min(r.max_n(), entringer::family_cap);
  std::string failure;
  for (int n = 3; n <= top && failure.empty(); ++n) {
    const auto fam = entringer::maximal_tier_family(n, r.workers());
    for (int k = 0; k <= n; ++k) {
      const BigInt want = k >= 1 && k <= n - 1 ? e.at(n - 1, k) : BigInt(0);
      if (BigInt(fam.count(k)) != want) {
        failure = mismatch("|R(" + std::to_string(n) + "," + std::to_string(k) + ")|", BigInt(fam.count(k)), want);
        break;
      }
    }
    for (const auto &[k, members] : fam.members_by_k)
      for (const auto &s : members)
        if (failure.empty() && entringer::bijection_f(entringer::bijection_f_inverse(s)) != s)
          failure = first_failure(n, s.values(), "f(finv(sigma)) != sigma");
  }
  r.check("|R(n,k)| = E(n-1,k) and f(finv) = id, 3 <= n <= " + std::to_string(top), failure.empty(), failure);

  failure.clear();
  const int alt = std::min(r.max_n(), 9);
  for (int m = 1; m <= alt && failure.empty(); ++m)
    for (const auto &p : entringer::enumerate_alternating(m)) {
      const auto s = entringer::bijection_f(p);
      if (pairs::rev_tier(s.values()) != m - 1 || s.position_of(1) != p[0] + 1 ||
          entringer::bijection_f_inverse(s) != p) {
        failure = first_failure(m, p.values(), "bijection");
        break;
      }
    }
  r.check("finv(f(pi)) = pi with f(pi) in R(n, pi_1), length <= " + std::to_string(alt), failure.empty(), failure);
}

// -- series -----------------------------------------------------------------

void series_suite(Runner &r)
{
  auto prefix = [](const series::TruncatedSeries &s, const std::vector<long long> &want) {
    for (std::size_t i = 0; i < want.size(); ++i)
      if (s[static_cast<int>(i)] != want[i])
        return false;
    return true;
  };
  const int order = 12;
  const auto m0 = series::mu_u_series(0, order);
  const auto m1 = series::mu_u_series(1, order);
  const auto m2 = series::mu_u_series(2, order);
  r.check("M0 leading coefficients", prefix(m0, mu0_reference));
  r.check("M1 leading coefficients", prefix(m1, mu1_reference));
  r.check("M2 leading coefficients", prefix(m2, mu2_reference));
  r.check("tier 2 series leading coefficients", prefix(series::tier_series(2, order), tier2_reference));
  r.check("all assembled series are integral", m0.is_integral() && m1.is_integral() && m2.is_integral());

  const auto one = series::TruncatedSeries::constant(1, order);
  const auto x = series::TruncatedSeries::monomial(1, 1, order);
  r.check("M0 + (1-x)/(1-2x) = C",
          m0 + (one - x) * series::reciprocal(one - Rational(2) * x) == series::catalan_series(order));

  const auto rec = tables::refined_counts_recurrence(order);
  std::string failure;
  const std::array<const series::TruncatedSeries *, 3> mus{&m0, &m1, &m2};
  for (int j = 0; j < 3 && failure.empty(); ++j)
    for (int n = 1; n <= order; ++n) {
      BigInt s = 0;
      for (int k = 1; k <= n; ++k)
        s += rec.mu_up.at(n, j, k);
      const Rational got = (*mus[static_cast<std::size_t>(j)])[n] / (j == 2 ? 2 : 1);
      if (got != Rational(s)) {
        failure = "j=" + std::to_string(j) + " n=" + std::to_string(n);
        break;
      }
    }
  r.check("M_j / j! = sum_k mu_U(n, j, k), n <= 12", failure.empty(), failure);

  const int top = std::min(r.max_n(), tables::default_table_cap);
  tables::SweepOptions sweep;
  sweep.workers = r.workers();
  const auto exact = tables::exact_tier_table(top, sweep);
  failure.clear();
  for (int t = 0; t <= 2 && failure.empty(); ++t) {
    const auto s = series::tier_series(t, top);
    for (int n = 1; n <= top; ++n)
      if (s[n] != Rational(exact.at(n, t))) {
        failure = "t=" + std::to_string(t) + " n=" + std::to_string(n);
        break;
      }
  }
  r.check("tier series = exact table columns 0..2, n <= " + std::to_string(top), failure.empty(), failure);

  failure.clear();
  const auto w = series::wilf_series(top);
  for (int n = 1; n <= top; ++n)
    if (w[n] != Rational(exact.at(n, 0) + exact.at(n, 1))) {
      failure = "n=" + std::to_string(n);
      break;
    }
  r.check("wilf series = t<=1 column, n <= " + std::to_string(top), failure.empty() && w[0] == 1, failure);
}

using Suite = void (*)(Runner &);

const std::vector<std::pair<std::string, Suite>> &suites()
{
  static const std::vector<std::pair<std::string, Suite>> s = {
    {"permcore", permcore_suite}, {"sorter", sorter_suite}, {"pairs", pairs_suite},     {"tables", tables_suite},
    {"basis", basis_suite},       {"entringer", entringer_suite}, {"series", series_suite},
  };
  return s;
}

} // namespace

const std::vector<std::string> &suite_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto &[name, fn] : suites())
      n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<CheckResult> run(const std::string &suite, const VerifyOptions &options)
{
  if (options.max_n < 1)
    throw std::invalid_argument("max_n must be positive");
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto &[name, fn] : suites()) {
    if (suite != "all" && suite != name)
      continue;
    found = true;
    Runner r(name, options, out);
    try {
      fn(r);
    } catch (const std::exception &e) {
      r.check("unexpected exception", false, e.what());
    }
  }
  if (!found)
    throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

bool all_passed(const std::vector<CheckResult> &results)
{
  return std::all_of(results.begin(), results.end(), [](const CheckResult &c) { return c.passed; });
}

} // namespace revstack::verify
