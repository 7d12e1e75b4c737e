#pragma once

#include <string>
#include <vector>

namespace bc {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::size_t passed_count() const;
};

// Registered verification suites, in canonical order.
const std::vector<std::string>& suite_names();

// Runs one suite. Unknown names are input errors. All suites are
// deterministic: fixed seeds, no timing, no platform-dependent output.
SuiteResult run_suite(const std::string& name);

// Stable text rendering: per-case lines for small suites, failures plus a
// tally otherwise. Byte-identical across runs.
std::string format_suite_text(const SuiteResult& result);

}  // namespace bc
