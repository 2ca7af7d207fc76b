#ifndef STRONGSUB_CLI_HPP
#define STRONGSUB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace strongsub::cli {

// Runs the command-line tool on the given arguments (program name excluded)
// and streams. Returns the process exit code: 0 for a computed value or a
// positive decision, 1 for a negative decision, 2 for usage, input, or
// engine errors. Reports are deterministic: the same arguments and input
// files produce byte-identical output, and every successful report ends
// with a final "RESULT: ..." line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strongsub::cli

#endif
