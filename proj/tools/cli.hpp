#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "otm/ordinal.hpp"

namespace otm::cli {

enum ExitCode : int { kResolved = 0, kUsageError = 1, kUndetermined = 2 };

// Runs one invocation. `args` excludes the program name. Output is
// deterministic for identical arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Evaluates expressions such as "(w+1)^2 * 3 + w" built from naturals, w,
// parentheses and the operators +, * and ^ (right associative, binding
// tightest). Throws otm::ParseError.
Ordinal evaluate_expression(std::string_view text);

}  // namespace otm::cli
