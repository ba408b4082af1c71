#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lcflow::cli
{
    inline constexpr int kExitOk = 0;
    inline constexpr int kExitDomain = 1;
    inline constexpr int kExitUsage = 2;

    /// Runs the command line `lcflow <args...>` (args excludes the program name). Returns the process exit code.
    int cli_main (const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
} // namespace lcflow::cli
