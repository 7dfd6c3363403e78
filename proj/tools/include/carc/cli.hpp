#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNormalization = 3;
inline constexpr int kExitCapacity = 4;

// args excludes the program name. "-" or a missing file argument reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace carc::cli
