#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "revstack/series.hpp"
#include "revstack/tables.hpp"

using namespace revstack;
using namespace revstack::series;

namespace
{

std::vector<long long> as_longs(const TruncatedSeries &s)
{
  std::vector<long long> out;
  for (const auto &c : s.integer_coefficients())
    out.push_back(static_cast<long long>(c));
  return out;
}

std::vector<long long> prefix(const std::vector<long long> &v, std::size_t n)
{
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

} // namespace

TEST_CASE("truncated arithmetic")
{
  const auto one_minus_2x = TruncatedSeries::from_integers({1, -2}, 8);
  CHECK(as_longs(reciprocal(one_minus_2x)) == oracle::coefficients(8, [](int i) { return 1LL << i; }));
  CHECK(as_longs(no_separated_pair_series(8)) ==
        oracle::coefficients(8, [](int i) { return i == 0 ? 0 : 1LL << (i - 1); }));

  const auto a = TruncatedSeries::from_integers({1, 1}, 5);
  const auto b = TruncatedSeries::from_integers({1, 1, 1}, 3);
  CHECK((a * b).order() == 3);
  CHECK(as_longs(a * b) == std::vector<long long>{1, 2, 2, 1});
  CHECK(as_longs(a - a) == std::vector<long long>(6, 0));
  CHECK_FALSE((a - a).valuation());
  CHECK(TruncatedSeries::monomial(3, 2, 4).valuation() == 2);
  CHECK(TruncatedSeries::monomial(3, 2, 4).shifted(1).order() == 5);
  CHECK(as_longs(TruncatedSeries::monomial(3, 2, 4).shifted(1)) == std::vector<long long>{0, 0, 0, 3, 0, 0});

  CHECK_THROWS_AS(reciprocal(TruncatedSeries::monomial(1, 1, 4)), SeriesError);
  CHECK_THROWS_AS(compose(a, a), SeriesError);

  // x^2 (1 + x) / x^2 = 1 + x, known through order 5 - 2
  const auto q = divide(TruncatedSeries::from_integers({0, 0, 1, 1}, 5), TruncatedSeries::monomial(1, 2, 5));
  CHECK(q.order() == 3);
  CHECK(as_longs(q) == std::vector<long long>{1, 1, 0, 0});
  CHECK_THROWS_AS(divide(TruncatedSeries::from_integers({1}, 5), TruncatedSeries::monomial(1, 1, 5)), SeriesError);

  const TruncatedSeries half({Rational(1, 2)}, 2);
  CHECK_FALSE(half.is_integral());
  CHECK_THROWS_AS(half.integer_coefficients(), SeriesError);
}

TEST_CASE("Catalan series and compositions")
{
  const auto c = catalan_series(15);
  CHECK(as_longs(c) == oracle::coefficients(15, [](int i) { return static_cast<long long>(oracle::catalan(i)); }));
  const auto x = TruncatedSeries::monomial(1, 1, 15);
  CHECK(TruncatedSeries::constant(1, 15) + x * c * c == c);

  // C(x C(x)) by substituting into the closed-form Catalan numbers
  const auto comp = catalan_compositions(8);
  std::vector<long long> direct(9, 0);
  const auto xc = x.truncated(8) * catalan_series(8);
  TruncatedSeries power = TruncatedSeries::constant(1, 8);
  for (int k = 0; k <= 8; ++k) {
    for (int i = 0; i <= 8; ++i)
      direct[static_cast<std::size_t>(i)] +=
        static_cast<long long>(oracle::catalan(k)) * static_cast<long long>(power[i]);
    power = power * xc;
  }
  CHECK(as_longs(comp.t1) == direct);
  CHECK(prefix(as_longs(comp.t1), 5) == std::vector<long long>{1, 1, 3, 11, 44});
  CHECK(comp.t2 == compose(catalan_series(8), x.truncated(8) * comp.t0 * comp.t1));
}

TEST_CASE("up-oriented series against reference prefixes")
{
  const auto m0 = as_longs(mu_u_series(0, 11));
  CHECK(prefix(m0, fixture::mu0.size()) == fixture::mu0);
  CHECK(as_longs(mu_u_series(1, 11)) == fixture::mu1);
  CHECK(as_longs(mu_u_series(2, 11)) == fixture::mu2);
  CHECK(prefix(as_longs(tier_series(2, 7)), 8) == fixture::tier2);
}

TEST_CASE("up-oriented tier-0 beyond the reference prefix")
{
  // M_U with tier 0: Av(231) minus those with no separated pair.
  const auto m0 = as_longs(mu_u_series(0, 20));
  for (int n = 1; n <= 20; ++n)
    CHECK(m0[static_cast<std::size_t>(n)] ==
          static_cast<long long>(oracle::catalan(n)) - (1LL << (n - 1)));
  CHECK(m0[0] == 0);
}

TEST_CASE("series agree with refined and exact counts")
{
  const auto refined = tables::refined_counts_recurrence(12);
  for (int j = 0; j <= 2; ++j) {
    const auto m = as_longs(mu_u_series(j, 12));
    for (int n = 1; n <= 12; ++n) {
      BigInt s = 0;
      for (int k = 1; k <= n; ++k)
        s += refined.mu_up.at(n, j, k);
      CHECK(BigInt(m[static_cast<std::size_t>(n)]) == s * (j == 2 ? 2 : 1));
    }
  }

  const auto exact = tables::exact_tier_table(9);
  for (int t = 0; t <= 2; ++t) {
    const auto ts = as_longs(tier_series(t, 9));
    CHECK(ts[0] == 0);
    for (int n = 1; n <= 9; ++n)
      CHECK(BigInt(ts[static_cast<std::size_t>(n)]) == exact.at(n, t));
  }

  const auto w = as_longs(wilf_series(9));
  CHECK(w[0] == 1);
  for (int n = 1; n <= 9; ++n)
    CHECK(BigInt(w[static_cast<std::size_t>(n)]) == exact.at(n, 0) + exact.at(n, 1));
  CHECK(prefix(w, 8) == std::vector<long long>{1, 1, 2, 6, 22, 89, 380, 1678});
}

TEST_CASE("order limits")
{
  CHECK_THROWS_AS(mu_u_series(3, 5), SeriesError);
  CHECK_THROWS_AS(mu_u_series(0, 31), SeriesError);
  CHECK_THROWS_AS(tier_series(1, -1), SeriesError);
  CHECK_NOTHROW(wilf_series(31, 40));
  CHECK(mu_u_series(2, 25).is_integral());
}
