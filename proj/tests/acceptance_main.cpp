// Runs the full verification table and prints one pass/fail line per
// criterion.  Exit status is nonzero if any criterion fails.

#include <cstdio>

#include "zdim/verify.hpp"

int main() {
  const auto rows = zdim::verify::run_suite(zdim::verify::Suite::all);
  int failures = 0;
  for (const auto& r : rows) {
    std::printf("[%2d] %-38s computed=%-12.3e tol=%-8.1e %s\n", r.id,
                r.name.c_str(), r.computed, r.tolerance,
                r.pass ? "PASS" : "FAIL");
    if (!r.pass) {
      ++failures;
      std::printf("     target: %s\n", r.target.c_str());
    }
  }
  std::printf("%zu criteria, %d failed\n", rows.size(), failures);
  return failures == 0 ? 0 : 1;
}
