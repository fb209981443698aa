#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tzero/quadfield.hpp"

namespace tzero {

struct CriterionResult {
  std::string id;
  bool pass;
  std::string detail;
  double seconds;
};

struct AcceptanceOptions {
  SqrtLift lift = SqrtLift::least_residue;
  int precision = 12;
  /// Digits of agreement demanded by every numeric criterion.
  int digits = 6;
};

/// AC-1 .. AC-7 under one embedding convention.
std::vector<CriterionResult> run_acceptance_suite(const AcceptanceOptions& options = {});
/// AC-1 .. AC-7 under the least-residue lift, then AC-8: the suite again under the
/// opposite lift with identical verdicts.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

void print_results(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace tzero
