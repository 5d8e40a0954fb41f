#ifndef THETA_CLI_HPP
#define THETA_CLI_HPP

#include <ostream>

namespace theta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitResource = 3;

/// Data goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace theta

#endif
