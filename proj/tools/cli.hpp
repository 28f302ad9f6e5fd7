#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sl2cli {

// Runs one CLI invocation. Exit codes: 0 success, 2 domain/validation error
// (a machine-readable error object goes to `out`), 64 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sl2cli
