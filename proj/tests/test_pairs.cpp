#include <doctest.h>

#include "oracles.hpp"
#include "revstack/pairs.hpp"

using namespace revstack;
using namespace revstack::pairs;

TEST_CASE("orientation examples")
{
  const Permutation p{2, 4, 1, 3};
  CHECK(pair_orientation(p, 1) == Orientation::Down);
  CHECK(pair_orientation(p, 2) == Orientation::Up);
  CHECK(pair_orientation(Permutation::identity(5), 3) == Orientation::NotSeparated);
  CHECK_THROWS_AS(pair_orientation(p, 0), std::out_of_range);
  CHECK_THROWS_AS(pair_orientation(p, 4), std::out_of_range);
}

TEST_CASE("tier examples")
{
  const auto w = rev_tier_by_pairs(Permutation{2, 4, 1, 3});
  CHECK(w.tier == 2);
  CHECK(w.witness == std::vector<int>{1, 2});
  CHECK(rev_tier_by_pairs(Permutation{4, 2, 6, 1, 3, 5}).tier == 4);
  CHECK(rev_tier_by_pairs(Permutation::identity(7)).tier == 0);
  CHECK(rev_tier_by_pairs_dp(Permutation{2, 4, 1, 3}) == 2);
  CHECK(rev_tier_by_pairs_dp(Permutation{2, 3, 1}) == 1);
}

TEST_CASE("classification examples")
{
  CHECK(classify(Permutation{1, 2, 3}) == PermClass::N);
  CHECK(classify(Permutation{1, 3, 2}) == PermClass::MU);
  CHECK(classify(Permutation{2, 3, 1}) == PermClass::MD);
  CHECK(std::string(to_string(PermClass::MU)) == "M_U");
  const auto prof = profile(Permutation{2, 4, 1, 3});
  CHECK(prof.tier == 2);
  CHECK(prof.class_label == PermClass::MD);
  CHECK(prof.witness_sequence == std::vector<int>{1, 2});
}

TEST_CASE("greedy, dp and subset oracle agree with the machine, n <= 8")
{
  for (int n = 0; n <= 8; ++n) {
    std::array<std::uint64_t, 3> classes{};
    oracle::each(n, [&](const oracle::Seq &s) {
      const Permutation p(s);
      const int greedy = rev_tier(s);
      REQUIRE(greedy == rev_tier_by_pairs(p).tier);
      REQUIRE(greedy == rev_tier_by_pairs_dp(p));
      REQUIRE(greedy == oracle::tier_by_subsets(s));
      REQUIRE(greedy == oracle::tier_by_machine(s));

      std::string o;
      for (auto x : orientations(s))
        o.push_back(to_char(x));
      REQUIRE(o == oracle::orientation_string(s));

      const auto prof = profile(p);
      REQUIRE(static_cast<int>(prof.witness_sequence.size()) == prof.tier);
      for (std::size_t j = 0; j < prof.witness_sequence.size(); ++j) {
        REQUIRE(pair_orientation(p, prof.witness_sequence[j]) == (j % 2 == 0 ? Orientation::Down : Orientation::Up));
        if (j > 0)
          REQUIRE(prof.witness_sequence[j] > prof.witness_sequence[j - 1]);
      }
      const auto first = o.find_first_not_of('.');
      const PermClass want =
        first == std::string::npos ? PermClass::N : (o[first] == 'U' ? PermClass::MU : PermClass::MD);
      REQUIRE(classify(p) == want);
      ++classes[static_cast<std::size_t>(want)];
    });
    CHECK(classes[0] + classes[1] + classes[2] == oracle::factorial(n));
  }
}

TEST_CASE("231 and 132 occurrences correspond to Down and Up pairs, n <= 8")
{
  for (int n = 0; n <= 8; ++n)
    oracle::each(n, [&](const oracle::Seq &s) {
      const auto o = oracle::orientation_string(s);
      REQUIRE((o.find('D') != std::string::npos) == oracle::contains(s, {2, 3, 1}));
      REQUIRE((o.find('U') != std::string::npos) == oracle::contains(s, {1, 3, 2}));
    });
}

TEST_CASE("deleting an entry never raises the tier, n <= 8")
{
  for (int n = 1; n <= 8; ++n)
    oracle::each(n, [&](const oracle::Seq &s) {
      const int t = rev_tier(s);
      for (std::size_t i = 0; i < s.size(); ++i)
        REQUIRE(rev_tier(oracle::delete_at(s, i)) <= t);
    });
}

TEST_CASE("reversal swaps classes and adds one to the tier, n <= 8")
{
  for (int n = 1; n <= 8; ++n)
    oracle::each(n, [&](const oracle::Seq &s) {
      const Permutation p(s);
      if (classify(p) != PermClass::MU)
        return;
      const auto r = reverse(p);
      REQUIRE(classify(r) == PermClass::MD);
      REQUIRE(rev_tier(r.values()) == rev_tier(s) + 1);
    });
}

TEST_CASE("witness pairs from pattern occurrences")
{
  CHECK(witness_pair_from_pattern(Permutation{2, 3, 1}, {2, 3, 1}, PatternKind::P231) == 1);

  const Permutation a{2, 1, 5, 3, 4};
  const int i = witness_pair_from_pattern(a, {1, 5, 4}, PatternKind::P132);
  CHECK(i >= 1);
  CHECK(i <= 3);
  CHECK(pair_orientation(a, i) == Orientation::Up);

  const Permutation b{3, 5, 1, 4, 2};
  CHECK(witness_pair_from_pattern(b, {3, 5, 4}, PatternKind::P132) == 3);

  CHECK_THROWS_AS(witness_pair_from_pattern(b, {1, 2, 3}, PatternKind::P132), std::invalid_argument);
  CHECK_THROWS_AS(witness_pair_from_pattern(b, {3, 5, 4}, PatternKind::P231), std::invalid_argument);

  // every 231 / 132 occurrence yields a pair of the right orientation, n <= 7
  for (int n = 3; n <= 7; ++n)
    oracle::each(n, [&](const oracle::Seq &s) {
      const Permutation p(s);
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          for (int z = y + 1; z < n; ++z) {
            const int u = s[static_cast<std::size_t>(x)], v = s[static_cast<std::size_t>(y)],
                      w = s[static_cast<std::size_t>(z)];
            if (w < u && u < v) {
              const int j = witness_pair_from_pattern(p, {u, v, w}, PatternKind::P231);
              REQUIRE(pair_orientation(p, j) == Orientation::Down);
              REQUIRE(w <= j);
              REQUIRE(j <= u - 1);
            }
            if (u < w && w < v) {
              const int j = witness_pair_from_pattern(p, {u, v, w}, PatternKind::P132);
              REQUIRE(pair_orientation(p, j) == Orientation::Up);
              REQUIRE(u <= j);
              REQUIRE(j <= w - 1);
            }
          }
    });
}

TEST_CASE("maximal tier witness")
{
  CHECK(max_tier_witness(6) == Permutation{4, 2, 6, 1, 3, 5});
  CHECK(max_tier_witness(7) == Permutation{6, 4, 2, 7, 1, 3, 5});
  CHECK(max_tier_witness(2) == Permutation{2, 1});
  CHECK(rev_tier(max_tier_witness(2).values()) == 0);
  CHECK_THROWS(max_tier_witness(1));
  for (int n = 2; n <= 12; ++n)
    CHECK(rev_tier(max_tier_witness(n).values()) == n - 2);
}
