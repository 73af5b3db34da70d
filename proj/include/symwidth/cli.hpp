#pragma once

#include <ostream>
#include <span>
#include <string>

#include "symwidth/json_io.hpp"

namespace symwidth::cli {

enum ExitCode : int { kSuccess = 0, kNegativeVerdict = 1, kUsageError = 2 };

struct CommandResult {
  int exit_code = kSuccess;
  /// The document written for this invocation; null on usage errors.
  io::Json payload;
};

/// Runs one invocation. args excludes the program name. The payload goes to
/// out (or to --out FILE), diagnostics to err.
CommandResult run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a document; the same payload as --json.
std::string render_human(const io::Json& doc);

/// Splits "p/q,r,..." into exact rationals.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace symwidth::cli
