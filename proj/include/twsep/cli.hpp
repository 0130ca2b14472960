#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twsep {

// Exit codes: 0 success, 1 validation or bound failure, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace twsep
