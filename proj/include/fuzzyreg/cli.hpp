#ifndef FUZZYREG_CLI_HPP
#define FUZZYREG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzyreg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitUsage = 64;

/// Runs the `fuzzyreg` command line. args[0] is the program name. Data goes
/// to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fuzzyreg::cli

#endif
