#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagsphere {

// Exit codes: 0 success, 1 assertion/verification failure, 2 inconclusive,
// 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace flagsphere
