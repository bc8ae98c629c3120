// cli.hpp
// The command-line surface. Kept callable as a function of (args, streams)
// so tests can drive every command without spawning processes.

#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace goldbach {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 usage or runtime error, 2 verification found counterexamples
// above the tolerated threshold.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goldbach
