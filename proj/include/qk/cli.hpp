#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;    // property fails or the object does not exist
inline constexpr int kExitInvalid = 2;  // parse, validation or usage error
inline constexpr int kExitCap = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qk::cli
