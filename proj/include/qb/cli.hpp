#pragma once

#include <string>
#include <vector>

namespace qb {

/// Entry point of the command-line tool; exits 0 on success, 2 on flag or
/// config errors, 3 on physics errors, 1 on validation failures.
int cli_main(const std::vector<std::string>& args);

} // namespace qb
