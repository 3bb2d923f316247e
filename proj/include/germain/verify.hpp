#pragma once

// The fixture suite behind `verify-paper`: every numeric claim the toolkit
// reproduces, each with a wall-clock budget. The CLI and the acceptance
// runner share this list so there is exactly one source of truth.

#include <string>
#include <vector>

namespace germain {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double elapsed_ms = 0.0;
  double budget_ms = 0.0;
  std::string detail;  // failure messages; empty when passed
};

// Runs all criteria in order. Never throws; failures are reported in the
// results.
std::vector<CriterionResult> run_paper_checks();

// One line per criterion plus a summary, as printed by `verify-paper`.
std::string render_check_report(const std::vector<CriterionResult>& results);

}  // namespace germain
