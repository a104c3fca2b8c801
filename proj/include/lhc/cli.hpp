#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lhc {

/// Command-line entry point. Instance input comes from a file path or
/// standard input (canonical JSON), results go to `out`, diagnostics to
/// `err`. Exit codes: 0 success/consistent, 1 conjecture violation
/// found, 2 invalid input, 3 budget exhausted.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace lhc
