#pragma once

/**
 * @file cli.hpp
 * @brief The `pk` command line, callable in-process.
 *
 * Exit codes: 0 success (coherent, valid, no violations), 1 negative verdict
 * (incoherent, invalid table, rule violation), 2 input error, 3 resource
 * limit, 4 internal error.
 */

#include <ostream>
#include <string>
#include <vector>

namespace pk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitInternal = 4;

/// `args` excludes the program name. A file argument of "-" reads stdin.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pk
