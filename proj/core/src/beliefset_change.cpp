#include "beliefchange/beliefset_change.hpp"

#include <algorithm>

namespace bc {

namespace {

bool member(const PropBeliefSet& k, const Formula& f) {
  return k.model_set().subset_of(models(f, k.signature()));
}

ModelSet countermodels_of(const Formula& f, const Signature& sig) {
  return models(f, sig).complement();
}

}  // namespace

BeliefBase representative_base(const PropBeliefSet& k, RepresentativeDomain domain,
                               std::size_t representative_limit) {
  const Signature& sig = k.signature();
  if (domain == RepresentativeDomain::Full) {
    return BeliefBase(sig, representatives(k.model_set(), representative_limit).formulas());
  }
  std::vector<Formula> clauses;
  for (const HornClause& c : enumerate_clauses(sig))
    if ((k.model_set().bits() & ~clause_models(c, sig)) == 0) clauses.push_back(c.to_formula(sig));
  return BeliefBase(sig, std::move(clauses));
}

std::vector<PropBeliefSet> bs_remainders(const PropBeliefSet& k, const Formula& f) {
  const Signature& sig = k.signature();
  const ModelSet counter = countermodels_of(f, sig);
  if (counter.empty()) return {};   // tautology
  if (!member(k, f)) return {k};    // K itself is the unique remainder
  std::vector<PropBeliefSet> out;
  for (const Valuation& w : counter.members())
    out.push_back(theory_of(k.model_set().with(w.index())));
  // countermodels are outside [K], so these are pairwise distinct
  return out;
}

PropBeliefSet bs_contract(const PropBeliefSet& k, const Formula& f, const BsMethod& method) {
  const Signature& sig = k.signature();
  const ModelSet counter = countermodels_of(f, sig);
  if (counter.empty() || !member(k, f)) return k;  // failure / vacuity

  if (std::holds_alternative<BsFullMeet>(method))
    return theory_of(k.model_set().unite(counter));

  if (const auto* mc = std::get_if<BsMaxichoice>(&method)) {
    if (!counter.contains(mc->countermodel))
      throw InvalidChoiceError("maxichoice valuation " + mc->countermodel.pattern() +
                               " is not a countermodel of the formula");
    return theory_of(k.model_set().with(mc->countermodel.index()));
  }

  const auto add_models = [&](const ModelSet& v) {
    if (v.empty() || !v.subset_of(counter))
      throw InvalidChoiceError(
          "partial meet requires a non-empty set of countermodels of the formula");
    return theory_of(k.model_set().unite(v));
  };
  if (const auto* pm = std::get_if<BsPartialMeet>(&method)) return add_models(pm->countermodels);
  if (const auto* in = std::get_if<BsInfra>(&method)) return add_models(in->countermodels);

  const auto& kernel = std::get<BsKernel>(method);
  const BeliefBase reps = representative_base(k, kernel.domain);
  const BeliefBase contracted = base_kernel_contraction(reps, f, kernel.incision);
  return theory_of(models(contracted.elements(), sig));
}

BsInfraView::BsInfraView(PropBeliefSet k, ModelSet countermodels, bool vacuous_member)
    : k_(std::move(k)), countermodels_(std::move(countermodels)), vacuous_member_(vacuous_member) {}

bool BsInfraView::family_empty() const { return !vacuous_member_ && countermodels_.empty(); }

bool BsInfraView::contains(const PropBeliefSet& candidate) const {
  if (vacuous_member_) return candidate == k_;
  if (countermodels_.empty()) return false;
  const ValuationBits extra = candidate.model_set().bits() & ~k_.model_set().bits();
  if (!k_.model_set().subset_of(candidate.model_set())) return false;
  return extra != 0 && (extra & ~countermodels_.bits()) == 0;
}

std::vector<PropBeliefSet> BsInfraView::enumerate(std::size_t limit) const {
  if (vacuous_member_) return {k_};
  if (countermodels_.empty()) return {};
  const ValuationBits domain = countermodels_.bits();
  const std::size_t count = (std::size_t{1} << countermodels_.size()) - 1;
  if (count > limit)
    throw LimitError("infra remainder family has " + std::to_string(count) +
                     " members, limit is " + std::to_string(limit));
  std::vector<ValuationBits> masks;
  ValuationBits sub = domain;
  while (sub != 0) {
    masks.push_back(k_.model_set().bits() | sub);
    sub = (sub - 1) & domain;
  }
  std::sort(masks.begin(), masks.end());
  std::vector<PropBeliefSet> out;
  for (ValuationBits bits : masks) out.push_back(theory_of(ModelSet(k_.signature(), bits)));
  return out;
}

BsInfraView bs_infra_remainders(const PropBeliefSet& k, const Formula& f) {
  const ModelSet counter = countermodels_of(f, k.signature());
  const bool vacuous = !counter.empty() && !member(k, f);
  return BsInfraView(k, counter, vacuous);
}

BsKernelFamily bs_kernels(const PropBeliefSet& k, const Formula& f, RepresentativeDomain domain,
                          std::size_t representative_limit) {
  BeliefBase base = representative_base(k, domain, representative_limit);
  SubsetFamily kernels = base_kernels(base, f);
  return BsKernelFamily{std::move(base), std::move(kernels)};
}

}  // namespace bc
