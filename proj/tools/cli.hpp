#pragma once

#include <iostream>
#include <ostream>

namespace szegedy::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kIoError = 3,
};

/// Entry point of the `szegedy` tool. Output goes to `out`, diagnostics to
/// `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace szegedy::cli
