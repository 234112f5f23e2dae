#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace readcode {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the readcode tool. args excludes the program name.
/// Machine output goes to out (or the --out file), summaries to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace readcode
