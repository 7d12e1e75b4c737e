// Acceptance gate: runs every verification suite and prints one line per
// criterion. Exits non-zero when any criterion fails.

#include <cstdio>

#include "beliefchange/verify.hpp"

int main() {
  int failures = 0;
  for (const std::string& name : bc::suite_names()) {
    bc::SuiteResult result;
    try {
      result = bc::run_suite(name);
    } catch (const std::exception& e) {
      std::printf("[FAIL] %s: exception: %s\n", name.c_str(), e.what());
      ++failures;
      continue;
    }
    const bool pass = result.passed();
    std::printf("[%s] %s (%zu/%zu checks)\n", pass ? "PASS" : "FAIL", name.c_str(),
                result.passed_count(), result.cases.size());
    if (!pass) {
      ++failures;
      for (const bc::CaseResult& c : result.cases)
        if (!c.pass) std::printf("       %s: %s\n", c.name.c_str(), c.detail.c_str());
    }
  }
  if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
