// bct - belief change toolkit command line
//
// Subcommands: closure, remainders, kernels, infra, contract, check, verify.
// Exit codes: 0 success, 1 input error, 2 limit exceeded, 3 verification
// failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "beliefchange/beliefset_change.hpp"
#include "beliefchange/horn_change.hpp"
#include "beliefchange/kb.hpp"
#include "beliefchange/postulates.hpp"
#include "beliefchange/report.hpp"
#include "beliefchange/verify.hpp"

namespace {

using namespace bc;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitLimit = 2;
constexpr int kExitVerification = 3;

struct Output {
  bool json = false;
  RunReport report;
  std::ostringstream text;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void kv(const std::string& key, const std::string& value) {
    text << key << ": " << value << "\n";
    report.outputs[key] = value;
  }

  // Timing goes to the JSON report only; text output stays byte-stable.
  void flush() {
    report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (json)
      std::cout << report.to_json().dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out.empty() ? "(empty)" : out;
}

std::vector<std::string> texts(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  for (const Formula& f : fs) out.push_back(f.text());
  return out;
}

std::vector<std::string> generator_texts(const HornBeliefSet& h) {
  std::vector<std::string> out;
  for (const HornClause& c : h.generators()) out.push_back(c.to_string(h.signature()));
  return out;
}

std::string describe_base(const BeliefBase& b) { return join(texts(b.elements())); }

std::string describe_prop(const PropBeliefSet& k) {
  return join(k.model_set().patterns());
}

std::string describe_horn(const HornBeliefSet& h) { return join(generator_texts(h)); }

// --- flag parsing -----------------------------------------------------------

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Formula> parse_formula_list(const std::string& list, const Signature& sig) {
  std::vector<Formula> out;
  for (const std::string& item : split_list(list)) out.push_back(parse(item, sig));
  return out;
}

SelectionSpec parse_selection(const std::string& spec) {
  if (spec == "all") return SelectionSpec::all();
  if (spec == "first") return SelectionSpec::first();
  if (spec.starts_with("idx:")) {
    std::vector<std::size_t> idx;
    for (const std::string& item : split_list(spec.substr(4)))
      idx.push_back(static_cast<std::size_t>(std::stoul(item)));
    return SelectionSpec::at(std::move(idx));
  }
  throw Error(ErrorKind::Input, "bad --selection '" + spec + "' (all|first|idx:I,J)");
}

IncisionSpec parse_incision(const std::string& spec, const Signature& sig) {
  if (spec == "max") return IncisionSpec::maximum();
  if (spec == "min-first") return IncisionSpec::minimal_first();
  if (spec.starts_with("set:"))
    return IncisionSpec::explicit_set_of(parse_formula_list(spec.substr(4), sig));
  throw Error(ErrorKind::Input, "bad --incision '" + spec + "' (max|min-first|set:F1,F2)");
}

InfraSpec parse_infra(const std::string& spec, const Signature& sig) {
  if (spec == "meet") return InfraSpec::meet_of_all();
  if (spec.starts_with("rem:"))
    return InfraSpec::remainder(static_cast<std::size_t>(std::stoul(spec.substr(4))));
  if (spec.starts_with("set:"))
    return InfraSpec::explicit_set_of(parse_formula_list(spec.substr(4), sig));
  throw Error(ErrorKind::Input, "bad --infra '" + spec + "' (meet|rem:N|set:F1,F2)");
}

HornInfraSpec parse_horn_infra(const std::string& spec, const Signature& sig) {
  if (spec == "meet") return HornInfraSpec::meet_of_all();
  if (spec.starts_with("rem:"))
    return HornInfraSpec::remainder(static_cast<std::size_t>(std::stoul(spec.substr(4))));
  if (spec.starts_with("set:"))
    return HornInfraSpec::explicit_set_of(parse_formula_list(spec.substr(4), sig));
  throw Error(ErrorKind::Input, "bad --infra '" + spec + "' (meet|rem:N|set:F1,F2)");
}

ModelSet parse_patterns(const std::string& list, const Signature& sig) {
  ValuationBits bits = 0;
  for (const std::string& pat : split_list(list)) {
    if (pat.size() != static_cast<std::size_t>(sig.size()))
      throw Error(ErrorKind::Input, "valuation pattern '" + pat + "' does not match the signature");
    unsigned idx = 0;
    for (char c : pat) {
      if (c != '0' && c != '1')
        throw Error(ErrorKind::Input, "valuation pattern '" + pat + "' must be binary");
      idx = idx * 2 + (c == '1');
    }
    bits |= ValuationBits{1} << idx;
  }
  return ModelSet(sig, bits);
}

RepresentativeDomain parse_domain(const std::string& spec) {
  if (spec == "full") return RepresentativeDomain::Full;
  if (spec == "horn-clauses") return RepresentativeDomain::HornClauses;
  throw Error(ErrorKind::Input, "bad --representatives '" + spec + "' (full|horn-clauses)");
}

// --- shared command state ----------------------------------------------------

struct CommonArgs {
  std::string kb_path;
  std::string mode = "base";
  std::string phi;
  bool json = false;
  std::size_t limit = 100;
};

void check_mode(const std::string& mode) {
  if (mode != "base" && mode != "prop-set" && mode != "horn-set")
    throw Error(ErrorKind::Input, "bad --mode '" + mode + "' (base|prop-set|horn-set)");
}

Output make_output(const std::string& command, const CommonArgs& args) {
  Output out;
  out.json = args.json;
  out.report.command = command;
  if (!args.kb_path.empty()) out.report.inputs["kb"] = args.kb_path;
  out.report.inputs["mode"] = args.mode;
  if (!args.phi.empty()) out.report.inputs["phi"] = args.phi;
  return out;
}

// Lists a family with truncation; `describe` renders one member.
template <typename Member, typename Describe>
void list_family(Output& out, const std::string& label, const std::vector<Member>& members,
                 std::size_t limit, Describe describe) {
  out.kv("count", std::to_string(members.size()));
  const bool truncated = members.size() > limit;
  nlohmann::json listed = nlohmann::json::array();
  for (std::size_t i = 0; i < members.size() && i < limit; ++i) {
    const std::string text = describe(members[i]);
    out.text << label << " " << i << ": " << text << "\n";
    listed.push_back(text);
  }
  out.report.outputs[label + "s"] = listed;
  out.kv("truncated", truncated ? "true" : "false");
}

// --- subcommands -------------------------------------------------------------

int cmd_closure(const CommonArgs& args) {
  const KBFile kb = load_kb_file(args.kb_path);
  Output out = make_output("closure", args);
  if (args.mode == "base") {
    const BeliefBase b(kb.sig, kb.formulas);
    out.kv("elements", describe_base(b));
    out.kv("size", std::to_string(b.size()));
  } else if (args.mode == "prop-set") {
    const PropBeliefSet k = theory_of(models(kb.formulas, kb.sig));
    out.kv("models", describe_prop(k));
    out.kv("formula", formula_with_models(k.model_set()).text());
  } else {
    const HornBeliefSet h = HornBeliefSet::from_formulas(kb.sig, kb.formulas);
    out.kv("generators", describe_horn(h));
    std::vector<std::string> clause_texts;
    for (const HornClause& c : h.clauses()) clause_texts.push_back(c.to_string(kb.sig));
    out.kv("clauses", join(clause_texts));
    out.kv("size", std::to_string(h.size()));
  }
  out.flush();
  return kExitOk;
}

int cmd_remainders(const CommonArgs& args) {
  const KBFile kb = load_kb_file(args.kb_path);
  const Formula f = parse(args.phi, kb.sig);
  Output out = make_output("remainders", args);
  if (args.mode == "base") {
    const BeliefBase b(kb.sig, kb.formulas);
    const SubsetFamily fam = base_remainders(b, f);
    std::vector<SubsetMask> members = fam.members;
    list_family(out, "remainder", members, args.limit,
                [&](SubsetMask m) { return join(texts(b.materialize(m))); });
  } else if (args.mode == "prop-set") {
    const PropBeliefSet k = theory_of(models(kb.formulas, kb.sig));
    list_family(out, "remainder", bs_remainders(k, f), args.limit,
                [&](const PropBeliefSet& t) { return describe_prop(t); });
  } else {
    const HornBeliefSet h = HornBeliefSet::from_formulas(kb.sig, kb.formulas);
    list_family(out, "remainder", e_remainders(h, f), args.limit,
                [&](const HornBeliefSet& t) { return describe_horn(t); });
  }
  out.flush();
  return kExitOk;
}

int cmd_kernels(const CommonArgs& args, const std::string& domain_spec) {
  const KBFile kb = load_kb_file(args.kb_path);
  const Formula f = parse(args.phi, kb.sig);
  Output out = make_output("kernels", args);
  if (args.mode == "base" || args.mode == "horn-set") {
    const BeliefBase b = args.mode == "base"
                             ? BeliefBase(kb.sig, kb.formulas)
                             : [&] {
                                 const HornBeliefSet h =
                                     HornBeliefSet::from_formulas(kb.sig, kb.formulas);
                                 std::vector<Formula> elems;
                                 for (const HornClause& c : h.clauses())
                                   elems.push_back(c.to_formula(kb.sig));
                                 return BeliefBase(kb.sig, elems);
                               }();
    out.kv("base-size", std::to_string(b.size()));
    const SubsetFamily fam = base_kernels(b, f);
    list_family(out, "kernel", fam.members, args.limit,
                [&](SubsetMask m) { return join(texts(b.materialize(m))); });
  } else {
    const PropBeliefSet k = theory_of(models(kb.formulas, kb.sig));
    const BsKernelFamily fam = bs_kernels(k, f, parse_domain(domain_spec));
    out.kv("base-size", std::to_string(fam.base.size()));
    list_family(out, "kernel", fam.kernels.members, args.limit,
                [&](SubsetMask m) { return join(texts(fam.base.materialize(m))); });
  }
  out.flush();
  return kExitOk;
}

int cmd_infra(const CommonArgs& args, const std::string& member_spec) {
  const KBFile kb = load_kb_file(args.kb_path);
  const Formula f = parse(args.phi, kb.sig);
  Output out = make_output("infra", args);
  if (args.mode == "base") {
    const BeliefBase b(kb.sig, kb.formulas);
    const BaseInfraView view = base_infra_remainders(b, f);
    if (!member_spec.empty()) {
      const std::vector<Formula> candidate = parse_formula_list(member_spec, kb.sig);
      out.kv("member", view.contains(candidate, b) ? "true" : "false");
    } else {
      list_family(out, "infra", view.enumerate().members, args.limit,
                  [&](SubsetMask m) { return join(texts(b.materialize(m))); });
    }
  } else if (args.mode == "prop-set") {
    const PropBeliefSet k = theory_of(models(kb.formulas, kb.sig));
    const BsInfraView view = bs_infra_remainders(k, f);
    if (!member_spec.empty()) {
      const PropBeliefSet candidate =
          theory_of(models(parse_formula_list(member_spec, kb.sig), kb.sig));
      out.kv("member", view.contains(candidate) ? "true" : "false");
    } else {
      list_family(out, "infra", view.enumerate(), args.limit,
                  [&](const PropBeliefSet& t) { return describe_prop(t); });
    }
  } else {
    const HornBeliefSet h = HornBeliefSet::from_formulas(kb.sig, kb.formulas);
    const HornInfraView view = infra_e_remainders(h, f);
    if (!member_spec.empty()) {
      const HornBeliefSet candidate =
          HornBeliefSet::from_formulas(kb.sig, parse_formula_list(member_spec, kb.sig));
      out.kv("member", view.contains(candidate) ? "true" : "false");
    } else {
      list_family(out, "infra", view.enumerate(), args.limit,
                  [&](const HornBeliefSet& t) { return describe_horn(t); });
    }
  }
  out.flush();
  return kExitOk;
}

struct ContractArgs {
  std::string method;
  std::string selection = "all";
  std::string incision = "max";
  std::string infra = "meet";
  std::string countermodels;
  std::string domain = "full";
};

int cmd_contract(const CommonArgs& args, const ContractArgs& c) {
  const KBFile kb = load_kb_file(args.kb_path);
  const Formula f = parse(args.phi, kb.sig);
  Output out = make_output("contract", args);
  out.report.inputs["method"] = c.method;

  if (args.mode == "base") {
    const BeliefBase b(kb.sig, kb.formulas);
    BeliefBase result = b;
    if (c.method == "partial-meet")
      result = base_partial_meet(b, f, parse_selection(c.selection));
    else if (c.method == "maxichoice")
      result = base_partial_meet(b, f, SelectionSpec::first());
    else if (c.method == "full-meet")
      result = base_partial_meet(b, f, SelectionSpec::all());
    else if (c.method == "kernel")
      result = base_kernel_contraction(b, f, parse_incision(c.incision, kb.sig));
    else if (c.method == "saturated-kernel")
      result = saturated_base_kernel_contraction(b, f, parse_incision(c.incision, kb.sig));
    else if (c.method == "infra")
      result = base_infra_contraction(b, f, parse_infra(c.infra, kb.sig));
    else
      throw Error(ErrorKind::Input, "bad --method '" + c.method + "' for base mode");
    out.kv("elements", describe_base(result));
  } else if (args.mode == "prop-set") {
    const PropBeliefSet k = theory_of(models(kb.formulas, kb.sig));
    BsMethod method = BsFullMeet{};
    if (c.method == "full-meet") {
      method = BsFullMeet{};
    } else if (c.method == "maxichoice") {
      const ModelSet chosen = parse_patterns(c.countermodels, kb.sig);
      if (chosen.size() != 1)
        throw Error(ErrorKind::Input, "maxichoice needs exactly one --countermodels pattern");
      method = BsMaxichoice{chosen.members().front()};
    } else if (c.method == "partial-meet") {
      method = BsPartialMeet{parse_patterns(c.countermodels, kb.sig)};
    } else if (c.method == "infra") {
      method = BsInfra{parse_patterns(c.countermodels, kb.sig)};
    } else if (c.method == "kernel") {
      method = BsKernel{parse_incision(c.incision, kb.sig), parse_domain(c.domain)};
    } else {
      throw Error(ErrorKind::Input, "bad --method '" + c.method + "' for prop-set mode");
    }
    const PropBeliefSet result = bs_contract(k, f, method);
    out.kv("models", describe_prop(result));
    out.kv("formula", formula_with_models(result.model_set()).text());
  } else {
    const HornBeliefSet h = HornBeliefSet::from_formulas(kb.sig, kb.formulas);
    HornBeliefSet result = h;
    if (c.method == "partial-meet")
      result = e_contract(h, f, EContractMethod::partial_meet(parse_selection(c.selection)));
    else if (c.method == "maxichoice")
      result = e_contract(h, f, EContractMethod::maxichoice());
    else if (c.method == "full-meet")
      result = e_contract(h, f, EContractMethod::full_meet());
    else if (c.method == "orderly-maxichoice")
      result = e_contract(h, f, EContractMethod::orderly_maxichoice());
    else if (c.method == "kernel")
      result = horn_kernel_e_contraction(h, f, parse_incision(c.incision, kb.sig));
    else if (c.method == "infra")
      result = infra_e_contraction(h, f, parse_horn_infra(c.infra, kb.sig));
    else
      throw Error(ErrorKind::Input, "bad --method '" + c.method + "' for horn-set mode");
    out.kv("generators", describe_horn(result));
    std::vector<std::string> clause_texts;
    for (const HornClause& cl : result.clauses()) clause_texts.push_back(cl.to_string(kb.sig));
    out.kv("clauses", join(clause_texts));
  }
  out.flush();
  return kExitOk;
}

ContractionTable table_from_operator(const std::string& spec, const std::string& mode,
                                     const KBFile& kb) {
  const auto subject = mode == "base"    ? ContractionTable::Subject::Base
                       : mode == "prop-set" ? ContractionTable::Subject::PropSet
                                            : ContractionTable::Subject::HornSet;
  const std::vector<Formula> grid = default_grid(kb.sig, subject);

  if (subject == ContractionTable::Subject::Base) {
    const BeliefBase b(kb.sig, kb.formulas);
    std::vector<std::vector<Formula>> outputs;
    for (const Formula& f : grid) {
      if (spec == "partial-meet:all" || spec == "full-meet")
        outputs.push_back(base_partial_meet(b, f, SelectionSpec::all()).elements());
      else if (spec == "partial-meet:first" || spec == "maxichoice")
        outputs.push_back(base_partial_meet(b, f, SelectionSpec::first()).elements());
      else if (spec == "kernel:max")
        outputs.push_back(base_kernel_contraction(b, f, IncisionSpec::maximum()).elements());
      else if (spec == "kernel:min-first")
        outputs.push_back(base_kernel_contraction(b, f, IncisionSpec::minimal_first()).elements());
      else if (spec == "saturated-kernel:max")
        outputs.push_back(
            saturated_base_kernel_contraction(b, f, IncisionSpec::maximum()).elements());
      else if (spec == "infra:meet")
        outputs.push_back(base_infra_contraction(b, f, InfraSpec::meet_of_all()).elements());
      else
        throw Error(ErrorKind::Input, "unknown base operator '" + spec + "'");
    }
    return ContractionTable::for_base(b, grid, outputs);
  }

  if (subject == ContractionTable::Subject::PropSet) {
    const PropBeliefSet k = theory_of(models(kb.formulas, kb.sig));
    std::vector<PropBeliefSet> outputs;
    for (const Formula& f : grid) {
      if (spec == "full-meet") {
        outputs.push_back(bs_contract(k, f, BsFullMeet{}));
      } else if (spec == "maxichoice:first") {
        const ModelSet counter = models(f, kb.sig).complement();
        if (counter.empty())
          outputs.push_back(k);  // tautology: vacuous
        else
          outputs.push_back(bs_contract(k, f, BsMaxichoice{counter.members().front()}));
      } else if (spec == "kernel:max") {
        outputs.push_back(bs_contract(k, f, BsKernel{IncisionSpec::maximum()}));
      } else if (spec == "kernel:min-first") {
        outputs.push_back(bs_contract(k, f, BsKernel{IncisionSpec::minimal_first()}));
      } else {
        throw Error(ErrorKind::Input, "unknown prop-set operator '" + spec + "'");
      }
    }
    return ContractionTable::for_prop(k, grid, outputs);
  }

  const HornBeliefSet h = HornBeliefSet::from_formulas(kb.sig, kb.formulas);
  std::vector<HornBeliefSet> outputs;
  for (const Formula& f : grid) {
    if (spec == "full-meet" || spec == "partial-meet:all")
      outputs.push_back(e_contract(h, f, EContractMethod::full_meet()));
    else if (spec == "maxichoice" || spec == "partial-meet:first")
      outputs.push_back(e_contract(h, f, EContractMethod::maxichoice()));
    else if (spec == "orderly-maxichoice")
      outputs.push_back(e_contract(h, f, EContractMethod::orderly_maxichoice()));
    else if (spec == "kernel:max")
      outputs.push_back(horn_kernel_e_contraction(h, f, IncisionSpec::maximum()));
    else if (spec == "kernel:min-first")
      outputs.push_back(horn_kernel_e_contraction(h, f, IncisionSpec::minimal_first()));
    else if (spec == "infra:meet")
      outputs.push_back(infra_e_contraction(h, f, HornInfraSpec::meet_of_all()));
    else
      throw Error(ErrorKind::Input, "unknown horn-set operator '" + spec + "'");
  }
  return ContractionTable::for_horn(h, grid, outputs);
}

int cmd_check(const CommonArgs& args, const std::string& postulate, const std::string& table_path,
              const std::string& operator_spec) {
  Output out = make_output("check", args);
  out.report.inputs["postulate"] = postulate;

  ContractionTable table = [&] {
    if (!table_path.empty()) {
      std::ifstream in(table_path);
      if (!in) throw Error(ErrorKind::Input, "cannot open table file '" + table_path + "'");
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Input, std::string("bad table JSON: ") + e.what());
      }
      out.report.inputs["table"] = table_path;
      return ContractionTable::from_json(j);
    }
    if (operator_spec.empty() || args.kb_path.empty())
      throw Error(ErrorKind::Input, "check needs --table FILE or --operator SPEC with --kb");
    out.report.inputs["operator"] = operator_spec;
    return table_from_operator(operator_spec, args.mode, load_kb_file(args.kb_path));
  }();

  const PostulateReport report = check(table, postulate);
  out.kv("postulate", report.postulate);
  out.kv("verdict", report.pass ? "pass" : "fail");
  out.report.verdicts.push_back(report.postulate + ": " + (report.pass ? "pass" : "fail"));
  if (report.counterexample) {
    const nlohmann::json ce = report.counterexample->to_json();
    out.report.outputs["counterexample"] = ce;
    out.text << "counterexample: " << ce.dump() << "\n";
  }
  out.flush();
  return report.pass ? kExitOk : kExitVerification;
}

int cmd_verify(const CommonArgs& args, const std::string& suite) {
  Output out = make_output("verify", args);
  out.report.inputs.erase("mode");
  out.report.inputs["suite"] = suite;

  std::vector<std::string> to_run;
  if (suite == "all")
    to_run = suite_names();
  else
    to_run.push_back(suite);

  bool all_pass = true;
  for (const std::string& name : to_run) {
    const SuiteResult result = run_suite(name);
    all_pass = all_pass && result.passed();
    out.text << format_suite_text(result);
    for (const CaseResult& c : result.cases)
      out.report.verdicts.push_back(name + "/" + c.name + ": " + (c.pass ? "pass" : "fail"));
    out.report.outputs[name] = result.passed() ? "pass" : "fail";
  }
  out.flush();
  return all_pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief change toolkit: contraction engines for belief bases, "
               "propositional belief sets and Horn belief sets"};
  app.require_subcommand(1);

  CommonArgs args;
  ContractArgs contract_args;
  std::string member_spec;
  std::string postulate;
  std::string table_path;
  std::string operator_spec;
  std::string suite;
  std::string domain_spec = "full";

  auto add_common = [&](CLI::App* cmd, bool needs_phi) {
    cmd->add_option("--kb", args.kb_path, "knowledge base file")->required();
    cmd->add_option("--mode", args.mode, "base|prop-set|horn-set")->required();
    if (needs_phi) cmd->add_option("--phi", args.phi, "formula to contract")->required();
    cmd->add_flag("--json", args.json, "emit a JSON run report");
    cmd->add_option("--limit", args.limit, "family listing cap (default 100)");
  };

  CLI::App* closure = app.add_subcommand("closure", "canonical representation of the input");
  add_common(closure, false);

  CLI::App* remainders = app.add_subcommand("remainders", "maximal non-implying family");
  add_common(remainders, true);

  CLI::App* kernels = app.add_subcommand("kernels", "minimal implying family");
  add_common(kernels, true);
  kernels->add_option("--representatives", domain_spec,
                      "kernel domain for prop-set mode: full|horn-clauses");

  CLI::App* infra = app.add_subcommand("infra", "infra remainder family / membership");
  add_common(infra, true);
  infra->add_option("--member", member_spec, "test membership of a comma-separated formula set");

  CLI::App* contract = app.add_subcommand("contract", "contract phi from the input");
  add_common(contract, true);
  contract->add_option("--method", contract_args.method,
                       "partial-meet|maxichoice|full-meet|orderly-maxichoice|kernel|"
                       "saturated-kernel|infra")
      ->required();
  contract->add_option("--selection", contract_args.selection, "all|first|idx:I,J");
  contract->add_option("--incision", contract_args.incision, "max|min-first|set:F1,F2");
  contract->add_option("--infra", contract_args.infra, "meet|rem:N|set:F1,F2");
  contract->add_option("--countermodels", contract_args.countermodels,
                       "comma-separated valuation patterns (prop-set)");
  contract->add_option("--representatives", contract_args.domain,
                       "kernel domain for prop-set mode: full|horn-clauses");

  CLI::App* check_cmd = app.add_subcommand("check", "evaluate a postulate");
  check_cmd->add_option("--postulate", postulate, "postulate name (e.g. K-6, B-4, H-e6)")
      ->required();
  check_cmd->add_option("--table", table_path, "contraction table JSON file");
  check_cmd->add_option("--operator", operator_spec, "constructed operator spec");
  check_cmd->add_option("--kb", args.kb_path, "knowledge base file (with --operator)");
  check_cmd->add_option("--mode", args.mode, "base|prop-set|horn-set (with --operator)");
  check_cmd->add_flag("--json", args.json, "emit a JSON run report");

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_flag("--json", args.json, "emit a JSON run report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(closure)) {
      check_mode(args.mode);
      return cmd_closure(args);
    }
    if (app.got_subcommand(remainders)) {
      check_mode(args.mode);
      return cmd_remainders(args);
    }
    if (app.got_subcommand(kernels)) {
      check_mode(args.mode);
      return cmd_kernels(args, domain_spec);
    }
    if (app.got_subcommand(infra)) {
      check_mode(args.mode);
      return cmd_infra(args, member_spec);
    }
    if (app.got_subcommand(contract)) {
      check_mode(args.mode);
      return cmd_contract(args, contract_args);
    }
    if (app.got_subcommand(check_cmd)) {
      if (!operator_spec.empty()) check_mode(args.mode);
      return cmd_check(args, postulate, table_path, operator_spec);
    }
    if (app.got_subcommand(verify)) return cmd_verify(args, suite);
  } catch (const LimitError& e) {
    std::cerr << "error (limit): " << e.what() << "\n";
    return kExitLimit;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
