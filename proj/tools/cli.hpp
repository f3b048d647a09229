#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dessins::cli {

// Runs one CLI command. Exit codes: 0 success, 1 domain errors (invalid
// input data, failed verification), 2 usage errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dessins::cli
