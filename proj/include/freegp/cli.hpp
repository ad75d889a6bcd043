#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freegp::cli {

enum class ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

struct CommandResult {
	ExitCode code = ExitCode::ok;
	std::string out; // stdout
	std::string err; // stderr
};

// Runs one command line (args excludes the program name). Expressions not
// given on the command line are read from input.
CommandResult run(const std::vector<std::string>& args, std::istream& input);

} // namespace freegp::cli
