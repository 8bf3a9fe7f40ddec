// Command-line front end, exposed as a function so the tests can drive it.
#ifndef LP_CLI_HPP
#define LP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lp::cli {

// Runs one invocation. Returns the process exit code: 0 when the command
// ran (semantic outcomes such as "no models" are data, not errors), 1 on
// usage, parse, or capacity errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lp::cli

#endif
