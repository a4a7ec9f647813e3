#pragma once

#include <iosfwd>

namespace eitmech::app {

// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_config_error = 1,
    exit_numeric_failure = 2,
    exit_all_unstable = 3,
};

// Entry point shared by the `eitmech` binary and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eitmech::app
