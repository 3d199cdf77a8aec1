#include <doctest.h>

#include "oracles.hpp"
#include "revstack/sorter.hpp"

using namespace revstack;
using namespace revstack::sorter;

TEST_CASE("single pass examples")
{
  auto a = single_pass(std::vector<int>{2, 4, 1, 3}, 1);
  CHECK(a.emitted == std::vector<int>{1});
  CHECK(a.residual_input == std::vector<int>{3, 4, 2});
  CHECK(a.next_needed == 2);

  auto b = single_pass(std::vector<int>{3, 4, 2}, 2);
  CHECK(b.emitted == std::vector<int>{2});
  CHECK(b.residual_input == std::vector<int>{4, 3});
  CHECK(b.next_needed == 3);

  auto c = single_pass(std::vector<int>{1, 2, 3}, 1);
  CHECK(c.emitted == std::vector<int>{1, 2, 3});
  CHECK(c.residual_input.empty());
}

TEST_CASE("simulation examples")
{
  CHECK(rev_tier_by_simulation(Permutation{2, 3, 1}).tier == 1);
  const auto t = rev_tier_by_simulation(Permutation{2, 4, 1, 3});
  CHECK(t.tier == 2);
  REQUIRE(t.passes.size() == 3);
  CHECK(t.passes[0].residual_stack_bottom_to_top == std::vector<int>{2, 4, 3});
  CHECK(t.passes[1].input_at_start == std::vector<int>{3, 4, 2});
  CHECK(t.passes[2].input_at_start == std::vector<int>{4, 3});
  CHECK(t.sorted);
  CHECK(t.final_output == std::vector<int>{1, 2, 3, 4});
  for (int n = 0; n <= 8; ++n)
    CHECK(rev_tier_by_simulation(Permutation::identity(n)).tier == 0);

  CHECK(sortable_within(Permutation{2, 3, 1}, 2));
  CHECK_FALSE(sortable_within(Permutation{2, 3, 1}, 1));
  CHECK_FALSE(sortable_within(Permutation{2, 4, 1, 3}, 2));
}

TEST_CASE("trace text starts each pass from its input")
{
  const auto text = render_trace_text(rev_tier_by_simulation(Permutation{2, 4, 1, 3}));
  CHECK(text.rfind("pass 1 start : - | - | 2413\n", 0) == 0);
  CHECK(text.find("pass 2 return : 1 | - | 342\n") != std::string::npos);
  CHECK(text.find("pass 3 return : 12 | - | 43\n") != std::string::npos);
  CHECK(text.find("tier 2") != std::string::npos);
}

TEST_CASE("simulation agrees with the plain machine oracle, n <= 8")
{
  for (int n = 0; n <= 8; ++n)
    oracle::each(n, [&](const oracle::Seq &s) {
      const auto trace = rev_tier_by_simulation(Permutation(s));
      REQUIRE(trace.tier == oracle::tier_by_machine(s));
      REQUIRE(simulated_tier(s) == trace.tier);
      REQUIRE(trace.sorted);
      if (n > 0)
        for (const auto &p : trace.passes)
          REQUIRE(!p.emitted.empty());
      // emitted blocks extend the identity
      std::vector<int> all;
      for (const auto &p : trace.passes)
        all.insert(all.end(), p.emitted.begin(), p.emitted.end());
      REQUIRE(all == oracle::identity(n));
    });
}

TEST_CASE("series machine examples")
{
  CHECK(series_machine_sort(Permutation{2, 4, 1, 3}, 3).sorted);
  CHECK(series_machine_sort(Permutation{2, 3, 1}, 2).sorted);
  CHECK_FALSE(series_machine_sort(Permutation{2, 4, 1, 3}, 2).sorted);
  CHECK_FALSE(series_machine_sort(Permutation{2, 3, 1}, 1).sorted);
  CHECK(series_machine_sort(Permutation{}, 1).sorted);
  CHECK_THROWS(series_machine_sort(Permutation{2, 1}, 0));

  const auto halted = series_machine_sort(Permutation{2, 3, 1}, 1);
  REQUIRE_FALSE(halted.trace.empty());
  CHECK(halted.trace.back().action == SeriesAction::Halt);
}

TEST_CASE("series machine with k stacks sorts iff tier <= k-1, n <= 7")
{
  for (int n = 1; n <= 7; ++n)
    oracle::each(n, [&](const oracle::Seq &s) {
      const int tier = oracle::tier_by_machine(s);
      for (int k = 1; k <= n; ++k) {
        const auto res = series_machine_sort(Permutation(s), k);
        REQUIRE(res.sorted == (tier <= k - 1));
        for (const auto &step : res.trace) {
          std::vector<int> all = step.state.input;
          all.insert(all.end(), step.state.output.begin(), step.state.output.end());
          for (const auto &st : step.state.stacks)
            all.insert(all.end(), st.begin(), st.end());
          std::sort(all.begin(), all.end());
          REQUIRE(all == oracle::identity(n));
        }
      }
    });
}

TEST_CASE("step limit guards the schedule")
{
  CHECK_THROWS_AS(series_machine_sort(Permutation{2, 4, 1, 3}, 3, 2), std::logic_error);
}
