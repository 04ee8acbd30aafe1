#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgroth {

/// Runs the kgroth command line with `args` (program name excluded) and
/// returns the process exit code: 0 success, 1 counterexample / suite
/// failure / not in span, 2 usage or input error, 3 internal invariant
/// violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgroth
