#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aspic::cli {

enum ExitCode { kOk = 0, kUsage = 1, kViolation = 2 };

// Runs one command line (args excludes the program name). Output goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Accepts "a", "~a", "¬a" and the Greek letters α β γ for alpha beta gamma.
std::string normalize_literal_text(std::string text);

}  // namespace aspic::cli
