#pragma once

#include <string>
#include <vector>

#include "nlosc/numerics.hpp"

// Acceptance criteria A1-A11: each check cross-validates approximation
// routes against the independent oracles and returns a pass/fail verdict
// with the measured numbers spelled out.

namespace nlosc {

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

// A2 core with an injectable limit polynomial so a perturbed polynomial can
// serve as a negative control in tests.
CriterionResult check_duffing_second_limit(const EvenPolynomial& limit_poly);

// Runs A1-A11 in order. Never throws; a criterion that raises reports FAIL
// with the exception text.
std::vector<CriterionResult> run_acceptance();

}  // namespace nlosc
