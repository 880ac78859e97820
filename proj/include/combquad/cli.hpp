#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace combquad {

/// Exit codes: 0 success, 1 domain error, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with args excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Scripted reproduction of the headline numbers; true when every check passes.
bool run_pi_demo(std::ostream& out);

}  // namespace combquad
