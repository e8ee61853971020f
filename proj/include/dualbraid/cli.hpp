#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dualbraid {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;  // not conjugate / not a member
inline constexpr int usage = 2;
inline constexpr int internal = 3;
}  // namespace exit_code

/// Runs the command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualbraid
