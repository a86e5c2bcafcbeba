#pragma once

#include <map>
#include <string>

namespace zdim::cli {

/// Parsed command line: one subcommand plus a key -> value table.  Unknown
/// keys are rejected by run(); every numeric parameter must parse to a
/// finite value.
struct CommandRequest {
  std::string subcommand;
  std::map<std::string, std::string> params;
  std::string output_format = "json";  // json | csv
};

/// Result of executing a request.  payload goes to stdout (data), diagnostics
/// to stderr.  Exit codes: 0 ok, 2 precondition violation / bad input,
/// 3 numerical non-convergence or a failed check.
struct Report {
  int exit_code = 0;
  std::string payload;
  std::string diagnostics;
};

/// Executes a request.  Identical requests produce byte-identical payloads.
Report run(const CommandRequest& req);

/// Usage text for the tool.
std::string usage();

}  // namespace zdim::cli
