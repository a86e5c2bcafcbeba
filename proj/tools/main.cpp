#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>

#include "zdim/cli.hpp"

// Thin argv adapter; all validation lives in zdim::cli::run so the parsing
// contract (unknown keys rejected, finite numerics, exit codes) is testable.
int main(int argc, char** argv) {
  using zdim::cli::CommandRequest;
  if (argc < 2 || std::strcmp(argv[1], "--help") == 0 ||
      std::strcmp(argv[1], "-h") == 0 || std::strcmp(argv[1], "help") == 0) {
    std::cout << zdim::cli::usage();
    return argc < 2 ? 2 : 0;
  }
  CommandRequest req;
  req.subcommand = argv[1];
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--", 0) != 0) {
      std::cerr << "error: expected --key, got '" << arg << "'\n";
      return 2;
    }
    if (i + 1 >= argc) {
      std::cerr << "error: missing value for " << arg << "\n";
      return 2;
    }
    const std::string key = arg.substr(2);
    const std::string value = argv[++i];
    if (key == "format")
      req.output_format = value;
    else
      req.params[key] = value;
  }
  const zdim::cli::Report rep = zdim::cli::run(req);
  if (!rep.payload.empty()) std::cout << rep.payload;
  if (!rep.diagnostics.empty()) std::cerr << rep.diagnostics;
  return rep.exit_code;
}
