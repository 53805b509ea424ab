#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace periodkit {

/// Exit status: 0 success, 1 error, 2 inconclusive certificate.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace periodkit
