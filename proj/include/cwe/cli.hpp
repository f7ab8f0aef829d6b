#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cwe {

/// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,  // verification mismatch or internal failure
  kExitInput = 2,
  kExitResource = 3,  // size cap or enumeration budget exceeded
};

/// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cwe
