#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitInput = 2;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name, e.g. {"decompose", "--json", "example1.txt"}; a path of
/// "-" reads the problem from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fpd::cli
