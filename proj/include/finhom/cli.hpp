#pragma once

// The command-line surface.  run_cli parses an argument vector (program
// name excluded), dispatches, and writes the report to `out` and error
// diagnostics to `err`.
//
// Exit codes: 0 = verified / found, 1 = checked and false (witness in the
// report), 2 = malformed input, failed precondition, or unknown command.
// Reports are deterministic: the same invocation produces byte-identical
// output regardless of --jobs.

#include <iosfwd>
#include <string>
#include <vector>

namespace finhom {

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace finhom
