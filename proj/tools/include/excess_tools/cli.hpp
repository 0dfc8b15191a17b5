#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace excess::tools {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, UsageError = 2 };

// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace excess::tools
