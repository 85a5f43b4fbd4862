#pragma once

#include <string>
#include <vector>

namespace mw {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;  // measured quantities, or the failure reason
};

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {1, 2, 3, 4, 5, 6, 7, 8, 9});
std::string format_result(const CriterionResult& r);

}  // namespace mw
