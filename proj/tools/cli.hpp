#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace pal2v::cli {

/// Exit codes: 0 success, 2 usage or domain error, 3 probe/environment error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitProbe = 3;

/// Overrides the default FtC when --ftc is not given.
inline constexpr const char* kFtcEnvVar = "PAL2V_FTC";

/// Runs the command line `args` (args[0] is the program name).
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pal2v::cli
