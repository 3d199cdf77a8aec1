#include "revstack/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

namespace revstack
{

unsigned default_workers()
{
  if (const char *env = std::getenv("REVSTACK_WORKERS")) {
    std::string_view text(env);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0)
      return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace revstack
