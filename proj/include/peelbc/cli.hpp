#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace peelbc {

// Entry point of the `peelbc` command-line tool. Subcommands: exact, sample,
// stats, synth, bench. Returns the process exit status.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

// Same, for in-process callers. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peelbc
