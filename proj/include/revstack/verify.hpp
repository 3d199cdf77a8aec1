#ifndef REVSTACK_VERIFY_HPP
#define REVSTACK_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace revstack::verify
{

struct CheckResult
{
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions
{
  /// Largest length used by exhaustive checks; each suite clamps it to its
  /// own caps.
  int max_n = 9;
  unsigned workers = 0;
  /// Called as each check finishes, in order.
  std::function<void(const CheckResult &)> on_result;
};

/// permcore, sorter, pairs, tables, basis, entringer, series.
const std::vector<std::string> &suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// on an unknown name.
std::vector<CheckResult> run(const std::string &suite, const VerifyOptions &options = {});

bool all_passed(const std::vector<CheckResult> &results);

} // namespace revstack::verify

#endif // REVSTACK_VERIFY_HPP
