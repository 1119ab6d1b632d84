#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tensorposet::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Report-only criteria record an outcome without asserting it.
  bool asserted = true;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

/// Identifiers of all criteria, in order.
std::vector<int> criterion_ids();

/// Runs one criterion. Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id);

/// Runs the given criteria (all when empty), writing one line per criterion to
/// `out` as it completes.
std::vector<CriterionResult> run_all(const std::vector<int>& ids, std::ostream& out);

/// "PASS  3  title  (1.2 s / 60 s)  detail".
std::string format(const CriterionResult& r);

/// True when every asserted criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace tensorposet::acceptance
