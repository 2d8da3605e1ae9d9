#ifndef SWAPBRIBERY_CLI_H_
#define SWAPBRIBERY_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace swapbribery {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 1,
  kExitInputError = 2,
  kExitCapacity = 3,
  kExitInconclusive = 4,
  kExitInternal = 5,
};

// Runs the tool; args[0] is the program name. Output documents go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swapbribery

#endif  // SWAPBRIBERY_CLI_H_
