#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcomb::selftest {

struct CriterionResult {
  int number;
  std::string name;
  bool pass;
  std::string detail;
  double elapsed_ms;
};

/// Runs the full acceptance checklist.
std::vector<CriterionResult> run_all();

/// Runs the checklist, printing one PASS/FAIL line per criterion.
/// Returns the number of failed criteria.
int run_and_report(std::ostream& out);

}  // namespace qcomb::selftest
