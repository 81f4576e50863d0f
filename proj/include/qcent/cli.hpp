#pragma once

// The qcent command line: quotient, cohomology, milnor, compare, check.
// Exit codes: 0 success or a finding, 1 error, 2 criterion inapplicable.

#include <ostream>
#include <string>
#include <vector>

namespace qcent {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcent
