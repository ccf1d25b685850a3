#pragma once

// The command-line verbs, returning their report text and exit code so they
// can be driven in-process.  Exit codes: 0 success, 1 check failure or
// degenerate form, 2 load or parse error.

#include "ribbonlie/expr.hpp"

namespace ribbonlie {

struct CommandResult {
	int exit_code = 0;
	std::string output;
};

CommandResult cmd_check(std::string const &path);
CommandResult cmd_killing(std::string const &path, std::string const &algebra, bool naive, bool json);
CommandResult cmd_decompose(std::string const &path, std::string const &algebra, bool json);
CommandResult cmd_eval(std::string const &path, std::string const &expr);

} // namespace ribbonlie
