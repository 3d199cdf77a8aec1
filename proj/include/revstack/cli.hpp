#ifndef REVSTACK_CLI_HPP
#define REVSTACK_CLI_HPP

#include <iosfwd>

namespace revstack::cli
{

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace revstack::cli

#endif // REVSTACK_CLI_HPP
