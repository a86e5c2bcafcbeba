#pragma once

#include <string>
#include <vector>

#include "zdim/errors.hpp"

namespace zdim::verify {

/// One row of the verification table.
struct CriterionResult {
  int id = 0;
  std::string name;
  std::string target;   // what is being compared
  double computed = 0;  // worst deviation observed
  double tolerance = 0;
  bool pass = false;
};

enum class Suite { all, zdim, product, regularization, specfun };

Suite suite_from_string(const std::string& s);
std::string to_string(Suite s);

/// Runs the criteria of the given suite in id order.  Deterministic: all
/// randomised checks use fixed seeds.
std::vector<CriterionResult> run_suite(Suite suite);

}  // namespace zdim::verify
