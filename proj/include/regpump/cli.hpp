#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace regpump {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,          // success, or the string is a member
    kExitNotMember = 1,   // member: the string is not in the language
    kExitUsage = 2,       // bad arguments, config or expression syntax
    kExitResource = 3,    // resource cap exceeded, or the port is unavailable
};

/// Runs the tool on `args` (without the program name). Commands: member,
/// gen, mpl, pump, graph, serve.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace regpump
