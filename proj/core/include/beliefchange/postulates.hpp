#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "beliefchange/base_change.hpp"
#include "beliefchange/beliefset_change.hpp"
#include "beliefchange/horn_change.hpp"

namespace bc {

// A contraction function given pointwise: one output per grid formula.
// Finite proxy for the operators the postulates quantify over.
class ContractionTable {
public:
  enum class Subject { Base, PropSet, HornSet };

  static ContractionTable for_base(BeliefBase base, std::vector<Formula> grid,
                                   std::vector<std::vector<Formula>> outputs);
  static ContractionTable for_prop(PropBeliefSet k, std::vector<Formula> grid,
                                   std::vector<PropBeliefSet> outputs);
  static ContractionTable for_horn(HornBeliefSet h, std::vector<Formula> grid,
                                   std::vector<HornBeliefSet> outputs);

  Subject subject() const { return subject_; }
  const Signature& signature() const;
  const std::vector<Formula>& grid() const { return grid_; }

  const BeliefBase& base() const { return *base_; }
  const std::vector<std::vector<Formula>>& base_outputs() const { return base_outputs_; }
  const PropBeliefSet& prop_subject() const { return *prop_; }
  const std::vector<PropBeliefSet>& prop_outputs() const { return prop_outputs_; }
  const HornBeliefSet& horn_subject() const { return *horn_; }
  const std::vector<HornBeliefSet>& horn_outputs() const { return horn_outputs_; }

  // {"subject": "base"|"prop-set"|"horn-set", "signature": [...],
  //  "elements": [...], "entries": {"<formula>": ["<formula>", ...]}}
  static ContractionTable from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

private:
  explicit ContractionTable(Subject s) : subject_(s) {}
  void sort_by_grid();

  Subject subject_;
  std::vector<Formula> grid_;  // global formula order; keys are unique
  std::optional<BeliefBase> base_;
  std::vector<std::vector<Formula>> base_outputs_;
  std::optional<PropBeliefSet> prop_;
  std::vector<PropBeliefSet> prop_outputs_;
  std::optional<HornBeliefSet> horn_;
  std::vector<HornBeliefSet> horn_outputs_;
};

struct Counterexample {
  std::optional<Formula> phi;
  std::optional<Formula> psi;
  std::optional<Formula> witness;
  std::vector<Formula> witness_set;
  std::string note;

  nlohmann::json to_json() const;
};

struct PostulateReport {
  std::string postulate;  // canonical name
  bool pass = false;
  std::optional<Counterexample> counterexample;

  nlohmann::json to_json() const;
};

// Canonical postulate names valid for a subject kind. Base subjects take
// B-1..B-5; propositional belief sets K-1..K-6; Horn belief sets K-1..K-6,
// H-e6, H-e7 and core-retainment.
std::vector<std::string> postulates_for(ContractionTable::Subject subject);

// Evaluates one postulate over the whole grid (and over grid pairs for
// Extensionality and Uniformity). Fails carry the first counterexample in
// deterministic order. Aliases like "recovery" or "relevance" resolve
// against the subject kind.
PostulateReport check(const ContractionTable& table, const std::string& postulate);

// The default quantification grid: every canonical non-tautological Horn
// clause for Horn subjects, one representative per equivalence class for
// propositional subjects and bases.
std::vector<Formula> default_grid(const Signature& sig, ContractionTable::Subject subject);

}  // namespace bc
