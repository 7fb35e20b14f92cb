#pragma once

/**
 * @file cli.hpp
 * @brief The `kf` command line: JSON on stdout, exit 0 / 1 (error) / 2 (inconclusive).
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace kf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kf
