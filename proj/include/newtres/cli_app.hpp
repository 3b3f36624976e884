#pragma once

namespace newtres {

/// Entry point for the command-line tool. Returns the process exit code:
/// 0 success, 2 usage or validation error, 1 internal error.
int run_cli(int argc, const char* const* argv);

}  // namespace newtres
