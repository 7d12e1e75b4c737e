#pragma once

#include <variant>
#include <vector>

#include "beliefchange/base_change.hpp"
#include "beliefchange/semantics.hpp"

namespace bc {

// Sentence-level questions about a closed theory go through a finite base:
// either one representative per entailed equivalence class, or the entailed
// non-tautological Horn clauses (the fragment the clause-shaped examples
// live in).
enum class RepresentativeDomain { Full, HornClauses };

BeliefBase representative_base(const PropBeliefSet& k, RepresentativeDomain domain,
                               std::size_t representative_limit = kDefaultRepresentativeLimit);

// Maximal subtheories of K not entailing f: theory_of([K] + one countermodel
// of f) per countermodel. Empty iff f is a tautology; {K} when f is not in K.
std::vector<PropBeliefSet> bs_remainders(const PropBeliefSet& k, const Formula& f);

struct BsPartialMeet {
  ModelSet countermodels;  // non-empty subset of the countermodels of f
};
struct BsMaxichoice {
  Valuation countermodel;
};
struct BsFullMeet {};
struct BsInfra {
  ModelSet countermodels;  // any non-empty subset; coincides with partial meet
};
struct BsKernel {
  IncisionSpec incision;
  RepresentativeDomain domain = RepresentativeDomain::Full;
};

using BsMethod = std::variant<BsPartialMeet, BsMaxichoice, BsFullMeet, BsInfra, BsKernel>;

// Contraction on the model level. Tautologies and non-members return K
// unchanged. The kernel method routes through a representative base, applies
// the base kernel contraction, and closes the result.
PropBeliefSet bs_contract(const PropBeliefSet& k, const Formula& f, const BsMethod& method);

// Infra remainder family of a closed theory: every theory between the full
// meet and some remainder. Membership needs no enumeration.
class BsInfraView {
public:
  BsInfraView(PropBeliefSet k, ModelSet countermodels, bool vacuous_member);

  bool family_empty() const;
  bool contains(const PropBeliefSet& candidate) const;
  std::vector<PropBeliefSet> enumerate(std::size_t limit = kDefaultInfraEnumerationLimit) const;

private:
  PropBeliefSet k_;
  ModelSet countermodels_;
  bool vacuous_member_;  // f not in K: the family is exactly {K}
};

BsInfraView bs_infra_remainders(const PropBeliefSet& k, const Formula& f);

struct BsKernelFamily {
  BeliefBase base;  // the representative base the kernels are subsets of
  SubsetFamily kernels;
};

BsKernelFamily bs_kernels(const PropBeliefSet& k, const Formula& f,
                          RepresentativeDomain domain = RepresentativeDomain::Full,
                          std::size_t representative_limit = kDefaultRepresentativeLimit);

}  // namespace bc
