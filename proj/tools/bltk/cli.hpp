#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bltk::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that replaces the built-in default grid denominator.
inline constexpr const char* kGridEnv = "BLTK_GRID";

int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bltk::cli
