#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagcert::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
};

/// Runs one command line (without the program name) and returns the exit
/// code. Never throws; every failure becomes an exit code and a message on
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcert::cli
