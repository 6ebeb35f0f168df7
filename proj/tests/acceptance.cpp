// Acceptance gate: prints one line per criterion and exits nonzero if any
// fails.

#include <cstdio>

#include "nlosc/validate.hpp"

int main() {
  const auto results = nlosc::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-4s %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
