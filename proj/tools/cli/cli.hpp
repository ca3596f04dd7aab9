#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace unicyclo::cli {

enum ExitCode : int {
  kOk = 0,
  kUnexpected = 1,
  kInputError = 2,
  kSearchExhausted = 3,
  kVerificationFailure = 4,
};

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unicyclo::cli
