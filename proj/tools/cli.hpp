#ifndef SPLITDEL_TOOLS_CLI_HPP
#define SPLITDEL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace splitdel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotSplit = 3;
inline constexpr int kExitInternal = 4;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace splitdel::cli

#endif // SPLITDEL_TOOLS_CLI_HPP
