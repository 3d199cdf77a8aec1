// One line per acceptance criterion. Exit status is non-zero when any fails.
#include <chrono>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "revstack/basis.hpp"
#include "revstack/entringer.hpp"
#include "revstack/pairs.hpp"
#include "revstack/series.hpp"
#include "revstack/sorter.hpp"
#include "revstack/tables.hpp"
#include "revstack/verify.hpp"

using namespace revstack;

namespace
{

using Clock = std::chrono::steady_clock;

struct Criterion
{
  std::ostringstream mismatches;
  int count = 0;

  template <class A, class B>
  void expect(const std::string &where, const A &got, const B &want)
  {
    if (got == want)
      return;
    if (count++ < 5)
      mismatches << (count > 1 ? "; " : "") << where << " got " << got << " want " << want;
  }
  void fail(const std::string &what)
  {
    if (count++ < 5)
      mismatches << (count > 1 ? "; " : "") << what;
  }
};

int failures = 0;

void report(int id, const std::string &label, const Criterion &c, Clock::time_point start, double limit_s)
{
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool ok = c.count == 0 && secs <= limit_s;
  failures += ok ? 0 : 1;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << label << " [" << std::fixed;
  std::cout.precision(1);
  std::cout << secs << "s, limit " << limit_s << "s]";
  if (c.count > 0)
    std::cout << " " << c.count << " mismatch(es): " << c.mismatches.str();
  else if (secs > limit_s)
    std::cout << " over time";
  std::cout << std::endl;
}

std::vector<Permutation> parse_all(const std::vector<std::string> &texts)
{
  std::vector<Permutation> out;
  for (const auto &t : texts)
    out.push_back(parse_permutation(t));
  return out;
}

std::string at(int n, int t)
{
  return "(" + std::to_string(n) + "," + std::to_string(t) + ")";
}

} // namespace

int main()
{
  tables::CountTable exact;

  {
    const auto start = Clock::now();
    Criterion c;
    exact = tables::exact_tier_table(10);
    for (int n = 1; n <= 10; ++n) {
      const auto &row = fixture::exact_table[static_cast<std::size_t>(n - 1)];
      for (std::size_t t = 0; t < row.size(); ++t)
        c.expect("exact" + at(n, static_cast<int>(t)), exact.at(n, static_cast<int>(t)), BigInt(row[t]));
    }
    report(1, "exact tier table n<=10 equals the reference", c, start, 120);
  }

  {
    const auto start = Clock::now();
    Criterion c;
    const auto cumulative = tables::cumulative_from_exact(exact);
    for (int n = 1; n <= 10; ++n) {
      const auto &row = fixture::cumulative_table[static_cast<std::size_t>(n - 1)];
      for (std::size_t t = 0; t < row.size(); ++t) {
        // columns past n-2 are saturated at n!
        const BigInt got = static_cast<int>(t) <= std::max(n - 2, 0) ? cumulative.at(n, static_cast<int>(t))
                                                                      : cumulative.at(n, std::max(n - 2, 0));
        c.expect("cumulative" + at(n, static_cast<int>(t)), got, BigInt(row[t]));
      }
    }
    c.expect("cumulative(9,3)", cumulative.at(9, 3), BigInt(218287));
    report(2, "cumulative tier table n<=10 equals the reference", c, start, 120);
  }

  {
    const auto start = Clock::now();
    Criterion c;
    const auto b1 = basis::compute_basis(1, 6, basis::Strategy::Extension);
    const auto b2 = basis::compute_basis(2, 9, basis::Strategy::Extension);
    if (b1.elements() != parse_all(fixture::basis_1))
      c.fail("B1 differs");
    if (!b1.complete)
      c.fail("B1 not complete");
    if (b2.elements() != parse_all(fixture::basis_2))
      c.fail("B2 differs");
    const auto b3 = basis::compute_basis(3, 9, basis::Strategy::Extension);
    if (b3.complete)
      c.fail("B3 report claims completeness below the length bound");
    for (const auto &[len, want] : fixture::basis_3_histogram) {
      const auto it = b3.elements_by_length.find(len);
      c.expect("B3 length " + std::to_string(len), it == b3.elements_by_length.end() ? 0 : it->second.size(), want);
    }
    for (const auto &[len, perms] : b3.elements_by_length)
      if (!fixture::basis_3_histogram.count(len))
        c.expect("B3 length " + std::to_string(len), perms.size(), 0u);
    report(3, "basis mining B1, B2 exact, B3 length<=9 histogram 16/24/11/1", c, start, 600);
  }

  {
    const auto start = Clock::now();
    Criterion c;
    for (int n = 0; n <= 9; ++n) {
      auto p = Permutation::identity(n).vector();
      do {
        const Permutation perm(p);
        const int sim = sorter::simulated_tier(p);
        const int greedy = pairs::rev_tier_by_pairs(perm).tier;
        const int dp = pairs::rev_tier_by_pairs_dp(perm);
        if (sim != greedy || sim != dp)
          c.fail("tier disagreement at " + perm.to_string());
        if (n <= 8)
          for (int k = 1; k <= std::max(n, 1); ++k)
            if (sorter::series_machine_sort(perm, k).sorted != (sim <= k - 1))
              c.fail("series machine k=" + std::to_string(k) + " at " + perm.to_string());
      } while (std::next_permutation(p.begin(), p.end()));
    }
    report(4, "simulation = greedy = dp for n<=9, series machine for n<=8", c, start, 300);
  }

  {
    const auto start = Clock::now();
    Criterion c;
    const auto e = entringer::entringer_table(10);
    for (int n = 3; n <= 10; ++n) {
      const auto fam = entringer::maximal_tier_family(n);
      for (int k = 1; k <= n; ++k)
        c.expect("|R" + at(n, k) + "|", BigInt(fam.count(k)), k <= n - 1 ? e.at(n - 1, k) : BigInt(0));
      c.expect("diagonal n=" + std::to_string(n), exact.at(n, n - 2),
               BigInt(fixture::euler[static_cast<std::size_t>(n - 1)]));
    }
    for (int m = 1; m <= 9; ++m)
      for (const auto &p : entringer::enumerate_alternating(m)) {
        const auto s = entringer::bijection_f(p);
        if (pairs::rev_tier(s.values()) != m - 1 || entringer::bijection_f_inverse(s) != p)
          c.fail("round trip at " + p.to_string());
      }
    report(5, "maximal tier family sizes, Euler diagonal, bijection round trips", c, start, 600);
  }

  {
    const auto start = Clock::now();
    Criterion c;
    auto ints = [](const series::TruncatedSeries &s) { return s.integer_coefficients(); };
    const auto m0 = ints(series::mu_u_series(0, 11));
    const auto m1 = ints(series::mu_u_series(1, 11));
    const auto m2 = ints(series::mu_u_series(2, 11));
    for (int i = 0; i <= 11; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (u < fixture::mu0.size())
        c.expect("mu0 x^" + std::to_string(i), m0[u], BigInt(fixture::mu0[u]));
      else // reference prefix stops early; Catalan minus powers of two
        c.expect("mu0 x^" + std::to_string(i), m0[u], BigInt(oracle::catalan(i)) - (BigInt(1) << (i - 1)));
      if (i <= 8)
        c.expect("mu1 x^" + std::to_string(i), m1[u], BigInt(fixture::mu1[u]));
      c.expect("mu2 x^" + std::to_string(i), m2[u], BigInt(fixture::mu2[u]));
    }
    const auto t2 = ints(series::tier_series(2, 7));
    for (std::size_t i = 0; i < fixture::tier2.size(); ++i)
      c.expect("tier2 x^" + std::to_string(i), t2[i], BigInt(fixture::tier2[i]));
    const auto w = ints(series::wilf_series(10));
    const auto av = basis::enumerate_av(parse_all({"4321", "4213"}), 10);
    for (int n = 1; n <= 10; ++n) {
      const auto u = static_cast<std::size_t>(n);
      c.expect("wilf vs table n=" + std::to_string(n), w[u],
               BigInt(fixture::cumulative_table[u - 1][1]));
      c.expect("wilf vs Av(4321,4213) n=" + std::to_string(n), w[u], BigInt(av[u]));
    }
    report(6, "series coefficients and Wilf equivalence", c, start, 60);
  }

  {
    const auto start = Clock::now();
    Criterion c;
    if (tables::refined_counts_recurrence(9) != tables::refined_counts_bruteforce(9))
      c.fail("recurrence differs from brute force for n<=9");
    const auto r = tables::refined_counts_recurrence(12);
    for (int n = 1; n <= 12; ++n)
      for (int t = 0; t <= n; ++t) {
        const std::string where = at(n, t);
        c.expect("muU(n,t,n)" + where, r.mu_up.at(n, t, n), BigInt(0));
        c.expect("muU(n,t,n-1)" + where, r.mu_up.at(n, t, n - 1), BigInt(0));
        c.expect("muD(n,t,1)" + where, r.mu_down.at(n, t, 1), BigInt(0));
        c.expect("muD(n,t,2)" + where, r.mu_down.at(n, t, 2), BigInt(0));
        BigInt up = 0, down = 0;
        for (int k = 1; k <= n; ++k) {
          c.expect("reversal" + where, r.mu_up.at(n, t, k), r.mu_down.at(n, t + 1, n - k + 1));
          up += r.mu_up.at(n, t, k);
          down += r.mu_down.at(n, t + 1, k);
        }
        c.expect("class sums" + where, up, down);
        if (t >= 1 && n >= 3) {
          BigInt s = 0;
          for (int m = 1; m <= n - 1; ++m)
            s += r.mu_down.at(m, t, m);
          c.expect("muU(n,t,n-2)" + where, r.mu_up.at(n, t, n - 2), s);
        }
      }
    report(7, "recurrence = brute force n<=9, count identities n<=12", c, start, 600);
  }

  {
    const auto start = Clock::now();
    Criterion c;
    verify::VerifyOptions options;
    options.max_n = 9;
    for (const auto &res : verify::run("all", options))
      if (!res.passed)
        c.fail(res.suite + ": " + res.name);
    report(8, "verify all --max-n 9", c, start, 600);
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion/criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
