#ifndef POLY_ACCEPTANCE_HPP
#define POLY_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace poly {

struct CriterionResult {
  int id = 0;
  std::string key;
  bool pass = false;
  bool resource_error = false;
  double seconds = 0.0;
  std::string detail;
};

/// Runs all acceptance criteria in order; never throws, failures are recorded
/// in the results.
std::vector<CriterionResult> run_acceptance_suite();

/// One line per criterion; returns the process exit code (0 pass, 1 fail,
/// 2 resource error).
int print_acceptance_report(std::ostream& out, bool json);

}  // namespace poly

#endif
