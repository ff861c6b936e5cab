#pragma once

// Command-line front end. The executable is a thin wrapper over run_cli so
// the whole surface can be exercised in-process.
//
//   geophase <spectrum|phases|evolve|twocycle|sweep> [flags]
//
// Results go to stdout (or --out) only once fully computed; failures print a
// single JSON error object on stderr and nothing else.

#include <iosfwd>
#include <string>
#include <vector>

namespace geophase {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,    // bad flags, missing or invalid parameters
  kExitIo = 3,       // unreadable config, unwritable output
  kExitNumeric = 4,  // non-finite results or failed internal checks
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geophase
