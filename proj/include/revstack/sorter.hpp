#ifndef REVSTACK_SORTER_HPP
#define REVSTACK_SORTER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revstack/permutation.hpp"

namespace revstack::sorter
{

// -- Single stack with reverse passes ---------------------------------------
//
// A pass pushes the input left to right. The stack top is popped to the
// output only when it is the next value the output needs (1, 2, ...), and
// pops are taken greedily before every push. When the input is exhausted
// whatever is left in the stack is popped top to bottom and becomes the
// input of the next pass.

struct PassResult
{
  std::vector<int> emitted;
  /// Stack contents popped top to bottom: the next pass's input.
  std::vector<int> residual_input;
  int next_needed = 1;
};

PassResult single_pass(std::span<const int> input, int next_needed);

enum class StackAction
{
  Start,  // a pass begins with the given input
  Push,
  Pop,    // stack top to output
  Return, // residual stack back to the input
};

const char *to_string(StackAction action);

/// One frame of the machine, recorded after `action` was applied.
struct StackStep
{
  int pass = 1;
  StackAction action = StackAction::Start;
  int value = 0; // moved value; 0 for Start and Return
  std::vector<int> output;
  std::vector<int> stack; // bottom to top
  std::vector<int> input;
};

struct PassRecord
{
  std::vector<int> input_at_start;
  std::vector<int> emitted;
  std::vector<int> residual_stack_bottom_to_top;
};

struct SortTrace
{
  std::vector<PassRecord> passes;
  std::vector<StackStep> steps;
  std::vector<int> final_output;
  int tier = 0;
  bool sorted = false;
};

/// Runs reverse passes until the stack drains; tier = passes - 1.
SortTrace rev_tier_by_simulation(const Permutation &perm);

/// Allocation-light variant returning only the tier.
int simulated_tier(std::span<const int> values);

/// True iff the permutation sorts in at most `passes` reverse passes.
bool sortable_within(const Permutation &perm, int passes);

// -- Stacks in series with output restrictions ------------------------------

struct SeriesMachineState
{
  /// stacks[0] is nearest the input, stacks.back() nearest the output.
  /// Each stack is listed bottom to top.
  std::vector<std::vector<int>> stacks;
  std::vector<int> input;
  std::vector<int> output;
};

enum class SeriesAction
{
  Start,
  Output,   // next needed value leaves the input or a stack for the output
  Push,     // input front onto stacks[0]
  Transfer, // top of stacks[s] onto stacks[s + 1]
  Halt,     // stuck: sorting failed
};

const char *to_string(SeriesAction action);

struct SeriesStep
{
  SeriesAction action = SeriesAction::Start;
  int value = 0;
  /// Source: -1 is the input, otherwise a stack index.
  int from = -1;
  /// Destination: -1 is the output, otherwise a stack index.
  int to = -1;
  SeriesMachineState state;
};

struct SeriesResult
{
  bool sorted = false;
  std::vector<SeriesStep> trace;
};

/// Deterministic schedule for `num_stacks` stacks in series:
///  (a) if the next needed value is at the input front or on top of any
///      stack it goes straight to the output;
///  (b) otherwise the input front is pushed onto the stack nearest the input;
///  (c) otherwise the rightmost non-empty stack hands its top to its left
///      neighbour;
///  (d) when only the last stack holds values and its top is not needed,
///      the machine halts unsorted.
/// `step_limit` guards against a non-terminating schedule; by default it is
/// 10 n^2 moves. Exceeding it throws std::logic_error.
SeriesResult series_machine_sort(const Permutation &perm, int num_stacks,
                                 std::optional<long> step_limit = std::nullopt);

/// Line-per-step text rendering: "pass action value : output | stack | input",
/// stacks listed bottom to top and "-" for an empty sequence.
std::string render_trace_text(const SortTrace &trace);
std::string render_series_text(const SeriesResult &result);

} // namespace revstack::sorter

#endif // REVSTACK_SORTER_HPP
