#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfkit {

/// Exit codes: 0 pass, 1 negative verdict or unmet precondition, 2 usage,
/// I/O or parse failure. Reports and diagnostics go to `out`; documents go to
/// --output when given, otherwise to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace hopfkit
