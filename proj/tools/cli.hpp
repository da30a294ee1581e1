#pragma once

#include <ostream>

namespace vpal::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kInvalidInput = 2,
  kBudgetExhausted = 3,
};

/// Runs the vpal command line against the given streams and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vpal::cli
