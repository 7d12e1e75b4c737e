#include "beliefchange/kb.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace bc {

namespace {

std::string strip(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t begin = 0, end = line.size();
  while (begin < end && (line[begin] == ' ' || line[begin] == '\t')) ++begin;
  while (end > begin && (line[end - 1] == ' ' || line[end - 1] == '\t' || line[end - 1] == '\r'))
    --end;
  return std::string(line.substr(begin, end - begin));
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

KBFile parse_kb_text(std::string_view text, const std::string& origin) {
  std::optional<Signature> sig;
  std::vector<Formula> formulas;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    if (!sig) {
      if (!line.starts_with("sig:"))
        throw Error(ErrorKind::Input,
                    where + ": expected a signature line 'sig: ...' before any formula");
      try {
        sig = Signature(split_names(line.substr(4)));
      } catch (const Error& e) {
        throw Error(ErrorKind::Input, where + ": " + e.what());
      }
      continue;
    }
    try {
      formulas.push_back(parse(line, *sig));
    } catch (const ParseError& e) {
      throw Error(ErrorKind::Input, where + ": " + e.what());
    }
  }
  if (!sig) throw Error(ErrorKind::Input, origin + ": missing signature line");
  return KBFile{*sig, std::move(formulas), origin};
}

KBFile load_kb_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open KB file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_kb_text(buffer.str(), path);
}

}  // namespace bc
