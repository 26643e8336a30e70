#pragma once

#include <string>
#include <vector>

namespace subdiv {

// One end-to-end acceptance check with its wall-clock budget applied.
struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

int criterion_count();
CriterionResult run_criterion(int index);  // 1-based
std::vector<CriterionResult> run_acceptance();

}  // namespace subdiv
