#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace madhava {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int verification_failure = 1;
inline constexpr int usage_error = 2;
inline constexpr int undefined_transform = 3;
}  // namespace exit_code

/// Runs `madhava <args...>` (args excludes the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace madhava
