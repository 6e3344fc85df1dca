#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ransom {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitDegenerate = 2,
  kExitCon1 = 3,
  kExitOracle = 4,
  kExitProperty = 5,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out redirects them; diagnostics and summary lines go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ransom
