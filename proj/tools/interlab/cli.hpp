#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interlab::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when the checked property fails or no interpolant exists, 2 on usage,
/// parse or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interlab::cli
