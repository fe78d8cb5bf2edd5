// Acceptance gate: runs the pinned verification grid and prints one
// pass/fail line per criterion.  Exits nonzero if any criterion fails.

#include "mirabolic/verifier.hpp"

#include <cstdio>

int main() {
  mirabolic::WorkBudget budget{mirabolic::default_work_limit(), 0};
  std::vector<mirabolic::CriterionResult> results;
  try {
    results = mirabolic::run_acceptance_suite(budget);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
    return 2;
  }

  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %s %s (%.2fs)%s%s\n", r.id.c_str(),
                r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                r.passed || r.detail.empty() ? "" : " :: ",
                r.passed ? "" : r.detail.c_str());
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
