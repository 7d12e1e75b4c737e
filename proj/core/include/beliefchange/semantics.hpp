#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "beliefchange/formula.hpp"

namespace bc {

inline constexpr int kDefaultPropAtomLimit = 4;
inline constexpr std::size_t kDefaultRepresentativeLimit = 256;

// One bit per valuation index; supports signatures up to 5 atoms.
using ValuationBits = std::uint32_t;

// Total truth assignment over a signature, stored as a fixed-width bit
// pattern: atom i occupies bit (n-1-i), so the numeric valuation index orders
// the same way as the printed pattern string ("011" for p=0,q=1,r=1).
class Valuation {
public:
  Valuation(Signature sig, unsigned index);

  bool value(int atom) const;
  unsigned index() const { return index_; }
  std::string pattern() const;
  const Signature& signature() const { return sig_; }

  bool operator==(const Valuation& other) const { return index_ == other.index_; }

private:
  Signature sig_;
  unsigned index_;
};

// Atom true in the meet iff true in both operands.
Valuation valuation_meet(const Valuation& a, const Valuation& b);

// Set of valuations over one signature, canonically ordered by valuation
// index (equivalently, by pattern string).
class ModelSet {
public:
  explicit ModelSet(Signature sig, ValuationBits bits = 0);
  static ModelSet universe(const Signature& sig);

  const Signature& signature() const { return sig_; }
  ValuationBits bits() const { return bits_; }
  unsigned valuation_count() const { return 1u << sig_.size(); }

  std::size_t size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(unsigned index) const { return (bits_ >> index) & 1u; }
  bool contains(const Valuation& v) const { return contains(v.index()); }
  bool subset_of(const ModelSet& other) const { return (bits_ & ~other.bits_) == 0; }

  ModelSet intersect(const ModelSet& other) const;
  ModelSet unite(const ModelSet& other) const;
  ModelSet complement() const;
  ModelSet with(unsigned index) const;

  std::vector<Valuation> members() const;
  std::vector<std::string> patterns() const;

  bool operator==(const ModelSet& other) const { return bits_ == other.bits_; }
  bool operator!=(const ModelSet& other) const { return !(*this == other); }

private:
  Signature sig_;
  ValuationBits bits_;
};

bool evaluate(const Formula& f, const Valuation& v);

ModelSet models(std::span<const Formula> formulas, const Signature& sig,
                int atom_limit = kDefaultPropAtomLimit);
ModelSet models(const Formula& f, const Signature& sig, int atom_limit = kDefaultPropAtomLimit);

bool entails(std::span<const Formula> premises, const Formula& conclusion, const Signature& sig,
             int atom_limit = kDefaultPropAtomLimit);
bool is_tautology(const Formula& f, const Signature& sig, int atom_limit = kDefaultPropAtomLimit);

// Model bits of one clause; no signature-size limit beyond the bit width.
ValuationBits clause_models(const HornClause& clause, const Signature& sig);

// Unit-propagation forward chaining: assert the goal's body atoms, saturate
// under the premises, succeed when the goal head (or an inconsistency) is
// derived. Polynomial; no signature-size limit.
bool horn_entails(std::span<const HornClause> premises, const HornClause& goal);
// Raw variant that also accepts tautological goals (head inside body).
bool horn_entails(std::span<const HornClause> premises, std::uint32_t goal_body, int goal_head);

// All universe clauses entailed by X. Inclusive, idempotent, monotone.
std::vector<HornClause> horn_closure(std::span<const HornClause> clauses, const Signature& sig,
                                     int atom_limit = kDefaultClauseUniverseAtomLimit);

// Least superset closed under pairwise valuation_meet.
ModelSet intersection_closure(const ModelSet& v);

// Logically closed theory, represented canonically by its model set.
// Equality is model-set equality; closure holds by representation.
class PropBeliefSet {
public:
  explicit PropBeliefSet(ModelSet model_set) : models_(std::move(model_set)) {}

  const ModelSet& model_set() const { return models_; }
  const Signature& signature() const { return models_.signature(); }
  bool contains(const Formula& f) const;  // membership == entailment
  bool inconsistent() const { return models_.empty(); }

  bool operator==(const PropBeliefSet& other) const { return models_ == other.models_; }
  bool operator!=(const PropBeliefSet& other) const { return !(*this == other); }

private:
  ModelSet models_;
};

PropBeliefSet theory_of(const ModelSet& v);

// One canonical formula per logical-equivalence class of sentences entailed
// by the theory with model set V, i.e. one per superset W of V. Ordered by
// the global formula order.
class RepresentativeSet {
public:
  explicit RepresentativeSet(std::vector<Formula> formulas) : formulas_(std::move(formulas)) {}
  const std::vector<Formula>& formulas() const { return formulas_; }
  std::size_t size() const { return formulas_.size(); }

private:
  std::vector<Formula> formulas_;
};

RepresentativeSet representatives(const ModelSet& v,
                                  std::size_t limit = kDefaultRepresentativeLimit);

// Canonical formula with exactly the given models: T and F special-cased,
// otherwise a disjunction of minterms over ascending valuations.
Formula formula_with_models(const ModelSet& v);

}  // namespace bc
