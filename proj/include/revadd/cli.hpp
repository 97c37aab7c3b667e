#pragma once

/// @file cli.hpp
/// @brief Command-line front end. `run` is the whole program; the binary
///        in tools/ only forwards argv, so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace revadd::cli {

/// Executes one invocation. Returns 0 on success/pass, 1 on a verification
/// failure, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace revadd::cli
