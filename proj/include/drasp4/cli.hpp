#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "drasp4/gwa.hpp"

namespace drasp4 {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification failure or projector overflow
inline constexpr int kExitUsage = 2;   // usage, parse, evaluation or configuration error

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads {"shift": [[da, db], ...], "c": [expr, ...], "g": [[expr, ...], ...]}
/// where each expr is a scalar expression string or an integer.
AffineSigmaData parse_ansatz(const std::string& json_text);

}  // namespace drasp4
