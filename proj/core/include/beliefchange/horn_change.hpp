#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "beliefchange/base_change.hpp"
#include "beliefchange/semantics.hpp"

namespace bc {

// Horn-closed theory, represented canonically by its entailed set of
// non-tautological Horn clauses (finite per signature). Equality is
// clause-set equality.
class HornBeliefSet {
public:
  // Closes the given clauses under Horn consequence.
  HornBeliefSet(Signature sig, std::vector<HornClause> generators);
  // Decomposes the formulas first; a non-Horn member is an input error.
  static HornBeliefSet from_formulas(const Signature& sig, std::span<const Formula> formulas);

  const Signature& signature() const { return sig_; }
  const std::vector<HornClause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }

  bool contains(const HornClause& c) const;
  bool entails_clause(const HornClause& c) const;
  bool entails(const Formula& f) const;  // f must be Horn
  ModelSet model_set() const;

  // Irredundant generator subset, greedily minimized in universe order.
  std::vector<HornClause> generators() const;
  // Conjunction of the generators, rendered; the default orderly key.
  std::string generator_text() const;

  bool operator==(const HornBeliefSet& other) const;
  bool operator!=(const HornBeliefSet& other) const { return !(*this == other); }

private:
  Signature sig_;
  std::vector<HornClause> clauses_;
};

// Linear order over Horn belief sets as a scoring key: sets compare by
// (key length, then key lexicographically); the maximal one is the most
// plausible. The default key is the canonical generator rendering.
struct HornOrderSpec {
  std::function<std::string(const HornBeliefSet&)> key;

  static HornOrderSpec standard();
};

// Maximal Horn-closed subsets of H not entailing f, ordered by ascending
// clause mask over the universe. Empty iff f is a Horn tautology; {H} when
// H does not entail f. f must be Horn.
std::vector<HornBeliefSet> e_remainders(const HornBeliefSet& h, const Formula& f);

struct EContractMethod {
  enum class Mode { PartialMeet, Maxichoice, FullMeet, OrderlyMaxichoice };

  Mode mode = Mode::FullMeet;
  SelectionSpec selection;  // PartialMeet
  HornOrderSpec order;      // OrderlyMaxichoice

  static EContractMethod partial_meet(SelectionSpec s) {
    return {Mode::PartialMeet, std::move(s), {}};
  }
  static EContractMethod maxichoice() { return {Mode::Maxichoice, {}, {}}; }
  static EContractMethod full_meet() { return {Mode::FullMeet, {}, {}}; }
  static EContractMethod orderly_maxichoice(HornOrderSpec o = HornOrderSpec::standard()) {
    return {Mode::OrderlyMaxichoice, {}, std::move(o)};
  }
};

// Intersection of the selected e-remainders (clause intersection of closed
// sets stays closed). Tautologies and non-consequences leave H unchanged.
HornBeliefSet e_contract(const HornBeliefSet& h, const Formula& f, const EContractMethod& method);

namespace detail {
struct HornContext;  // clause-mask workspace, defined in horn_change.cpp
}

// Infra e-remainder family: every Horn belief set between the intersection
// of all e-remainders and some e-remainder. Membership tests the sandwich
// directly; enumeration walks only closed sets.
class HornInfraView {
public:
  bool family_empty() const { return remainder_masks_.empty(); }
  const std::vector<HornBeliefSet>& remainders() const { return remainders_; }
  HornBeliefSet meet() const;

  bool contains(const HornBeliefSet& candidate) const;
  std::vector<HornBeliefSet> enumerate(std::size_t limit = kDefaultInfraEnumerationLimit) const;

private:
  friend HornInfraView infra_e_remainders(const HornBeliefSet& h, const Formula& f);

  explicit HornInfraView(Signature sig) : sig_(std::move(sig)) {}

  std::shared_ptr<const detail::HornContext> ctx_;
  Signature sig_;
  std::vector<HornBeliefSet> remainders_;
  std::vector<std::uint64_t> remainder_masks_;
  std::uint64_t meet_mask_ = 0;
  std::uint64_t h_mask_ = 0;
};

HornInfraView infra_e_remainders(const HornBeliefSet& h, const Formula& f);

struct HornInfraSpec {
  enum class Mode { MeetOfAll, RemainderIndex, Explicit };

  Mode mode = Mode::MeetOfAll;
  std::size_t remainder_index = 0;
  std::vector<Formula> explicit_generators;

  static HornInfraSpec meet_of_all() { return {Mode::MeetOfAll, 0, {}}; }
  static HornInfraSpec remainder(std::size_t i) { return {Mode::RemainderIndex, i, {}}; }
  static HornInfraSpec explicit_set_of(std::vector<Formula> fs) {
    return {Mode::Explicit, 0, std::move(fs)};
  }
};

// The chosen infra e-remainder; H when the family is empty.
HornBeliefSet infra_e_contraction(const HornBeliefSet& h, const Formula& f,
                                  const HornInfraSpec& spec);

// Base kernel contraction over H's clause set, closed under Horn
// consequence. The incision is validated against the clause-set kernels.
HornBeliefSet horn_kernel_e_contraction(const HornBeliefSet& h, const Formula& f,
                                        const IncisionSpec& spec);

// Searches the closure of X for a complement X'' with Cn(X'') strictly below
// Cn(X) and Cn(Xp + X'') = Cn(X). Requires Cn(0) < Cn(Xp) < Cn(X) strictly.
// Returns the first witness in ascending clause-mask order, or nullopt.
std::optional<std::vector<HornClause>> decomposability_witness(std::span<const HornClause> x,
                                                               std::span<const HornClause> xp,
                                                               const Signature& sig);

}  // namespace bc
