#include "beliefchange/horn_change.hpp"

#include "horn_internal.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace bc {

namespace {

using ClauseMask = std::uint64_t;

std::vector<HornClause> formulas_to_clauses(std::span<const Formula> formulas) {
  std::vector<HornClause> out;
  for (const Formula& f : formulas) {
    const HornDecomposition d = as_horn_clauses(f);
    if (!d.is_horn())
      throw InvalidChoiceError("'" + f.text() + "' is not a Horn formula (offending part: '" +
                               d.offending().text() + "')");
    out.insert(out.end(), d.clauses().begin(), d.clauses().end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

HornBeliefSet::HornBeliefSet(Signature sig, std::vector<HornClause> generators)
    : sig_(std::move(sig)), clauses_(horn_closure(generators, sig_)) {}

HornBeliefSet HornBeliefSet::from_formulas(const Signature& sig,
                                           std::span<const Formula> formulas) {
  return HornBeliefSet(sig, formulas_to_clauses(formulas));
}

bool HornBeliefSet::contains(const HornClause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

bool HornBeliefSet::entails_clause(const HornClause& c) const {
  return horn_entails(clauses_, c);
}

bool HornBeliefSet::entails(const Formula& f) const {
  const HornDecomposition d = as_horn_clauses(f);
  if (!d.is_horn())
    throw InvalidChoiceError("'" + f.text() + "' is not a Horn formula (offending part: '" +
                             d.offending().text() + "')");
  for (const HornClause& c : d.clauses())
    if (!entails_clause(c)) return false;
  return true;
}

ModelSet HornBeliefSet::model_set() const {
  ValuationBits bits = ModelSet::universe(sig_).bits();
  for (const HornClause& c : clauses_) bits &= clause_models(c, sig_);
  return ModelSet(sig_, bits);
}

std::vector<HornClause> HornBeliefSet::generators() const {
  const ValuationBits target = model_set().bits();
  std::vector<HornClause> gen = clauses_;
  // Drop derived clauses first: larger bodies sort later in universe order.
  for (std::size_t i = gen.size(); i-- > 0;) {
    ValuationBits rest = ModelSet::universe(sig_).bits();
    for (std::size_t j = 0; j < gen.size(); ++j)
      if (j != i) rest &= clause_models(gen[j], sig_);
    if (rest == target) gen.erase(gen.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return gen;
}

std::string HornBeliefSet::generator_text() const {
  const std::vector<HornClause> gen = generators();
  if (gen.empty()) return "T";
  std::vector<Formula> fs;
  for (const HornClause& c : gen) fs.push_back(c.to_formula(sig_));
  return Formula::conjoin(fs).text();
}

bool HornBeliefSet::operator==(const HornBeliefSet& other) const {
  return sig_ == other.sig_ && clauses_ == other.clauses_;
}

HornOrderSpec HornOrderSpec::standard() {
  return HornOrderSpec{[](const HornBeliefSet& h) { return h.generator_text(); }};
}

namespace {

using Context = detail::HornContext;

}  // namespace

std::vector<HornBeliefSet> e_remainders(const HornBeliefSet& h, const Formula& f) {
  const Signature& sig = h.signature();
  const Context ctx(sig);
  const ClauseMask h_mask = ctx.mask_of(h.clauses());
  const auto masks = detail::horn_remainder_masks(ctx, h_mask, ctx.models_of(h_mask), detail::horn_formula_bits(ctx, sig, f));
  std::vector<HornBeliefSet> out;
  for (ClauseMask m : masks) out.push_back(ctx.to_set(sig, m));
  return out;
}

HornBeliefSet e_contract(const HornBeliefSet& h, const Formula& f, const EContractMethod& method) {
  const Signature& sig = h.signature();
  const Context ctx(sig);
  const ClauseMask h_mask = ctx.mask_of(h.clauses());
  const auto masks = detail::horn_remainder_masks(ctx, h_mask, ctx.models_of(h_mask), detail::horn_formula_bits(ctx, sig, f));
  if (masks.empty()) return h;  // tautology

  std::vector<std::size_t> chosen;
  switch (method.mode) {
    case EContractMethod::Mode::FullMeet:
      for (std::size_t i = 0; i < masks.size(); ++i) chosen.push_back(i);
      break;
    case EContractMethod::Mode::Maxichoice:
      chosen.push_back(0);
      break;
    case EContractMethod::Mode::PartialMeet:
      switch (method.selection.mode) {
        case SelectionSpec::Mode::All:
          for (std::size_t i = 0; i < masks.size(); ++i) chosen.push_back(i);
          break;
        case SelectionSpec::Mode::First:
          chosen.push_back(0);
          break;
        case SelectionSpec::Mode::Indices:
          if (method.selection.indices.empty())
            throw InvalidChoiceError("selection must choose at least one e-remainder");
          for (std::size_t i : method.selection.indices) {
            if (i >= masks.size())
              throw InvalidChoiceError("selection index " + std::to_string(i) +
                                       " out of range, family has " +
                                       std::to_string(masks.size()));
            chosen.push_back(i);
          }
          break;
      }
      break;
    case EContractMethod::Mode::OrderlyMaxichoice: {
      const auto key = method.order.key ? method.order.key : HornOrderSpec::standard().key;
      std::size_t best = 0;
      std::string best_key = key(ctx.to_set(sig, masks[0]));
      for (std::size_t i = 1; i < masks.size(); ++i) {
        const std::string k = key(ctx.to_set(sig, masks[i]));
        const bool higher =
            k.size() != best_key.size() ? k.size() > best_key.size() : k > best_key;
        if (higher) {
          best = i;
          best_key = k;
        }
      }
      chosen.push_back(best);
      break;
    }
  }

  ClauseMask meet = ~ClauseMask{0};
  for (std::size_t i : chosen) meet &= masks[i];
  return ctx.to_set(sig, meet & h_mask);
}

HornBeliefSet HornInfraView::meet() const {
  if (family_empty()) throw Error(ErrorKind::Input, "meet of an empty infra family");
  return ctx_->to_set(sig_, meet_mask_);
}

bool HornInfraView::contains(const HornBeliefSet& candidate) const {
  if (family_empty()) return false;
  if (candidate.signature() != sig_) return false;
  const ClauseMask c = ctx_->mask_of(candidate.clauses());
  if ((meet_mask_ & ~c) != 0) return false;
  for (ClauseMask r : remainder_masks_)
    if ((c & ~r) == 0) return true;
  return false;
}

std::vector<HornBeliefSet> HornInfraView::enumerate(std::size_t limit) const {
  if (family_empty()) return {};
  std::vector<ClauseMask> members;
  std::unordered_map<ClauseMask, bool> closed_memo;
  std::size_t work = 0;
  for (ClauseMask r : remainder_masks_) {
    const ClauseMask diff = r & ~meet_mask_;
    const int width = std::popcount(diff);
    if (width > 22 || (work += std::size_t{1} << width) > (std::size_t{1} << 22))
      throw LimitError("infra e-remainder enumeration too large");
    ClauseMask sub = diff;
    while (true) {
      const ClauseMask m = meet_mask_ | sub;
      auto [it, fresh] = closed_memo.try_emplace(m, false);
      if (fresh) it->second = ctx_->closed(m);
      if (it->second) members.push_back(m);
      if (sub == 0) break;
      sub = (sub - 1) & diff;
    }
  }
  std::sort(members.begin(), members.end(), [](ClauseMask a, ClauseMask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() > limit)
    throw LimitError("infra e-remainder family has " + std::to_string(members.size()) +
                     " members, limit is " + std::to_string(limit));
  std::vector<HornBeliefSet> out;
  for (ClauseMask m : members) out.push_back(ctx_->to_set(sig_, m));
  return out;
}

HornInfraView infra_e_remainders(const HornBeliefSet& h, const Formula& f) {
  HornInfraView view(h.signature());
  view.ctx_ = std::make_shared<const Context>(view.sig_);
  const Context& ctx = *view.ctx_;
  view.h_mask_ = ctx.mask_of(h.clauses());
  view.remainder_masks_ = detail::horn_remainder_masks(ctx, view.h_mask_, ctx.models_of(view.h_mask_),
                                          detail::horn_formula_bits(ctx, view.sig_, f));
  if (!view.remainder_masks_.empty()) {
    view.meet_mask_ = ~ClauseMask{0};
    for (ClauseMask r : view.remainder_masks_) view.meet_mask_ &= r;
  }
  for (ClauseMask r : view.remainder_masks_) view.remainders_.push_back(ctx.to_set(view.sig_, r));
  return view;
}

HornBeliefSet infra_e_contraction(const HornBeliefSet& h, const Formula& f,
                                  const HornInfraSpec& spec) {
  const HornInfraView view = infra_e_remainders(h, f);
  if (view.family_empty()) return h;
  switch (spec.mode) {
    case HornInfraSpec::Mode::MeetOfAll:
      return view.meet();
    case HornInfraSpec::Mode::RemainderIndex:
      if (spec.remainder_index >= view.remainders().size())
        throw InvalidChoiceError("remainder index " + std::to_string(spec.remainder_index) +
                                 " out of range, family has " +
                                 std::to_string(view.remainders().size()));
      return view.remainders()[spec.remainder_index];
    case HornInfraSpec::Mode::Explicit: {
      const HornBeliefSet candidate =
          HornBeliefSet::from_formulas(h.signature(), spec.explicit_generators);
      if (!view.contains(candidate))
        throw InvalidChoiceError(
            "invalid infra choice: the closure is not between the meet of the e-remainders and "
            "an e-remainder");
      return candidate;
    }
  }
  return h;
}

HornBeliefSet horn_kernel_e_contraction(const HornBeliefSet& h, const Formula& f,
                                        const IncisionSpec& spec) {
  const Signature& sig = h.signature();
  std::vector<Formula> elements;
  for (const HornClause& c : h.clauses()) elements.push_back(c.to_formula(sig));
  const BeliefBase base(sig, elements);
  const BeliefBase contracted = base_kernel_contraction(base, f, spec);
  return HornBeliefSet::from_formulas(sig, contracted.elements());
}

std::optional<std::vector<HornClause>> decomposability_witness(std::span<const HornClause> x,
                                                               std::span<const HornClause> xp,
                                                               const Signature& sig) {
  const Context ctx(sig);
  const ValuationBits x_bits = ctx.models_of(ctx.mask_of(x));
  const ValuationBits xp_bits = ctx.models_of(ctx.mask_of(xp));
  const ClauseMask x_closure = ctx.theory_at(x_bits);
  const ClauseMask xp_closure = ctx.theory_at(xp_bits);
  if (xp_closure == 0)
    throw InvalidChoiceError("Cn(X') must strictly exceed Cn(empty)");
  if ((xp_closure & ~x_closure) != 0 || xp_closure == x_closure)
    throw InvalidChoiceError("Cn(X') must be strictly below Cn(X)");

  if (std::popcount(x_closure) > 22)
    throw LimitError("decomposability search over more than 22 closure clauses");
  ClauseMask sub = 0;
  while (true) {
    const ValuationBits sub_bits = ctx.models_of(sub);
    if (sub_bits != x_bits && (xp_bits & sub_bits) == x_bits) return ctx.materialize(sub);
    sub = (sub - x_closure) & x_closure;
    if (sub == 0) break;
  }
  return std::nullopt;
}

}  // namespace bc
