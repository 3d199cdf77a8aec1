#include "revstack/sorter.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace revstack::sorter
{

namespace
{

std::string seq(std::span<const int> values)
{
  return values.empty() ? std::string("-") : format_values(values);
}

struct PassRunner
{
  std::vector<int> output;
  std::vector<StackStep> *steps = nullptr;

  // Returns the residual stack, bottom to top.
  std::vector<int> run(int pass, std::span<const int> input)
  {
    std::vector<int> stack;
    stack.reserve(input.size());
    const auto record = [&](StackAction action, int value, std::size_t consumed) {
      if (steps)
        steps->push_back({pass, action, value, output, stack,
                          std::vector<int>(input.begin() + static_cast<std::ptrdiff_t>(consumed), input.end())});
    };
    if (pass == 1)
      record(StackAction::Start, 0, 0);
    for (std::size_t i = 0; i < input.size(); ++i) {
      stack.push_back(input[i]);
      record(StackAction::Push, input[i], i + 1);
      while (!stack.empty() && stack.back() == static_cast<int>(output.size()) + 1) {
        output.push_back(stack.back());
        stack.pop_back();
        record(StackAction::Pop, output.back(), i + 1);
      }
    }
    return stack;
  }
};

} // namespace

const char *to_string(StackAction action)
{
  switch (action) {
  case StackAction::Start: return "start";
  case StackAction::Push: return "push";
  case StackAction::Pop: return "pop";
  case StackAction::Return: return "return";
  }
  return "?";
}

const char *to_string(SeriesAction action)
{
  switch (action) {
  case SeriesAction::Start: return "start";
  case SeriesAction::Output: return "output";
  case SeriesAction::Push: return "push";
  case SeriesAction::Transfer: return "transfer";
  case SeriesAction::Halt: return "halt";
  }
  return "?";
}

PassResult single_pass(std::span<const int> input, int next_needed)
{
  PassResult result;
  std::vector<int> stack;
  stack.reserve(input.size());
  for (int v : input) {
    stack.push_back(v);
    while (!stack.empty() && stack.back() == next_needed) {
      result.emitted.push_back(next_needed++);
      stack.pop_back();
    }
  }
  result.residual_input.assign(stack.rbegin(), stack.rend());
  result.next_needed = next_needed;
  return result;
}

int simulated_tier(std::span<const int> values)
{
  std::vector<int> input(values.begin(), values.end());
  std::vector<int> stack;
  stack.reserve(input.size());
  int next = 1;
  int passes = 0;
  while (!input.empty()) {
    ++passes;
    const int before = next;
    for (int v : input) {
      stack.push_back(v);
      while (!stack.empty() && stack.back() == next) {
        ++next;
        stack.pop_back();
      }
    }
    if (next == before)
      throw std::logic_error("reverse pass made no progress");
    input.assign(stack.rbegin(), stack.rend());
    stack.clear();
  }
  return passes == 0 ? 0 : passes - 1;
}

SortTrace rev_tier_by_simulation(const Permutation &perm)
{
  SortTrace trace;
  PassRunner runner;
  runner.steps = &trace.steps;
  std::vector<int> input = perm.vector();
  int pass = 0;
  while (!input.empty()) {
    ++pass;
    const std::size_t emitted_before = runner.output.size();
    PassRecord rec;
    rec.input_at_start = input;
    std::vector<int> residual = runner.run(pass, input);
    rec.emitted.assign(runner.output.begin() + static_cast<std::ptrdiff_t>(emitted_before),
                       runner.output.end());
    rec.residual_stack_bottom_to_top = residual;
    if (rec.emitted.empty())
      throw std::logic_error("reverse pass made no progress");
    trace.passes.push_back(std::move(rec));
    input.assign(residual.rbegin(), residual.rend());
    if (!input.empty())
      trace.steps.push_back({pass + 1, StackAction::Return, 0, runner.output, {}, input});
  }
  trace.final_output = runner.output;
  trace.sorted = std::is_sorted(trace.final_output.begin(), trace.final_output.end()) &&
                 static_cast<int>(trace.final_output.size()) == perm.size();
  trace.tier = pass == 0 ? 0 : pass - 1;
  return trace;
}

bool sortable_within(const Permutation &perm, int passes)
{
  if (passes < 1)
    throw std::invalid_argument("at least one pass is required");
  return simulated_tier(perm.values()) <= passes - 1;
}

SeriesResult series_machine_sort(const Permutation &perm, int num_stacks, std::optional<long> step_limit)
{
  if (num_stacks < 1)
    throw std::invalid_argument("at least one stack is required");
  const long n = perm.size();
  const long limit = step_limit.value_or(10 * n * n);

  SeriesResult result;
  SeriesMachineState state;
  state.stacks.resize(static_cast<std::size_t>(num_stacks));
  state.input = perm.vector();
  std::reverse(state.input.begin(), state.input.end()); // back() is the front

  auto snapshot = [&] {
    SeriesMachineState s = state;
    std::reverse(s.input.begin(), s.input.end());
    return s;
  };
  result.trace.push_back({SeriesAction::Start, 0, -1, -1, snapshot()});

  long moves = 0;
  for (;;) {
    const int next = static_cast<int>(state.output.size()) + 1;
    if (next > n) {
      result.sorted = true;
      break;
    }
    if (++moves > limit)
      throw std::logic_error("series machine exceeded its step limit");

    // (a) direct to output from the input front or any stack top
    if (!state.input.empty() && state.input.back() == next) {
      state.input.pop_back();
      state.output.push_back(next);
      result.trace.push_back({SeriesAction::Output, next, -1, -1, snapshot()});
      continue;
    }
    bool emitted = false;
    for (std::size_t s = 0; s < state.stacks.size(); ++s) {
      auto &st = state.stacks[s];
      if (!st.empty() && st.back() == next) {
        st.pop_back();
        state.output.push_back(next);
        result.trace.push_back({SeriesAction::Output, next, static_cast<int>(s), -1, snapshot()});
        emitted = true;
        break;
      }
    }
    if (emitted)
      continue;

    // (b) feed the first stack
    if (!state.input.empty()) {
      const int v = state.input.back();
      state.input.pop_back();
      state.stacks.front().push_back(v);
      result.trace.push_back({SeriesAction::Push, v, -1, 0, snapshot()});
      continue;
    }

    // (c) the rightmost non-empty stack passes its top leftwards
    auto it = std::find_if(state.stacks.begin(), state.stacks.end(),
                           [](const std::vector<int> &st) { return !st.empty(); });
    const auto s = static_cast<std::size_t>(it - state.stacks.begin());
    if (s + 1 >= state.stacks.size()) {
      // (d) only the last stack is occupied and its top is not wanted
      result.trace.push_back({SeriesAction::Halt, 0, -1, -1, snapshot()});
      break;
    }
    const int v = state.stacks[s].back();
    state.stacks[s].pop_back();
    state.stacks[s + 1].push_back(v);
    result.trace.push_back({SeriesAction::Transfer, v, static_cast<int>(s), static_cast<int>(s + 1), snapshot()});
  }
  return result;
}

std::string render_trace_text(const SortTrace &trace)
{
  std::ostringstream os;
  for (const auto &step : trace.steps) {
    os << "pass " << step.pass << ' ' << to_string(step.action);
    if (step.value)
      os << ' ' << step.value;
    os << " : " << seq(step.output) << " | " << seq(step.stack) << " | " << seq(step.input) << '\n';
  }
  os << "tier " << trace.tier << '\n';
  return os.str();
}

std::string render_series_text(const SeriesResult &result)
{
  std::ostringstream os;
  for (const auto &step : result.trace) {
    os << to_string(step.action);
    if (step.value)
      os << ' ' << step.value;
    os << " : " << seq(step.state.output);
    // leftmost (output side) stack first, as drawn
    for (auto it = step.state.stacks.rbegin(); it != step.state.stacks.rend(); ++it)
      os << " | " << seq(*it);
    os << " | " << seq(step.state.input) << '\n';
  }
  os << (result.sorted ? "sorted" : "not sorted") << '\n';
  return os.str();
}

} // namespace revstack::sorter
