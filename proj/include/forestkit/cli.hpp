#ifndef FORESTKIT_CLI_HPP
#define FORESTKIT_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace forestkit {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitLimit = 2,         ///< NotConverged or InstanceTooLarge
    kExitInconsistent = 3,  ///< InconsistentWithTheorem or an internal invariant
};

/// Runs one command. `args` excludes the program name. Errors go to `err`
/// as "error:<Code>:<message>".
int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace forestkit

#endif
