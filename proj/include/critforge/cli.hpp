#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace critforge::cli {

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a domain error or a
/// structure that fails validation, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace critforge::cli
