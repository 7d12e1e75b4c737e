#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "beliefchange/formula.hpp"

namespace bc {

// A knowledge-base file: an explicit signature line followed by one formula
// per line. '#' starts a comment, blank lines are skipped.
//
//   sig: p, q, r
//   p -> q
//   q -> r
struct KBFile {
  Signature sig;
  std::vector<Formula> formulas;
  std::string origin;
};

KBFile parse_kb_text(std::string_view text, const std::string& origin = "<kb>");
KBFile load_kb_file(const std::string& path);

}  // namespace bc
