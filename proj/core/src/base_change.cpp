#include "beliefchange/base_change.hpp"

#include <algorithm>
#include <bit>

namespace bc {

BeliefBase::BeliefBase(Signature sig, std::vector<Formula> elements) : sig_(std::move(sig)) {
  for (const Formula& f : elements)
    if (f.max_atom_index() >= sig_.size())
      throw Error(ErrorKind::Input,
                  "formula '" + f.text() + "' uses atoms outside the base signature");
  std::sort(elements.begin(), elements.end(), FormulaOrder{});
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.size() > kMaxBaseElements)
    throw LimitError("belief bases are limited to " + std::to_string(kMaxBaseElements) +
                     " elements");
  elements_ = std::move(elements);
}

SubsetMask BeliefBase::full_mask() const {
  return elements_.size() == kMaxBaseElements ? ~SubsetMask{0}
                                              : (SubsetMask{1} << elements_.size()) - 1;
}

std::optional<std::size_t> BeliefBase::find(const Formula& f) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), f, FormulaOrder{});
  if (it != elements_.end() && *it == f) return static_cast<std::size_t>(it - elements_.begin());
  return std::nullopt;
}

std::vector<Formula> BeliefBase::materialize(SubsetMask mask) const {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if ((mask >> i) & 1u) out.push_back(elements_[i]);
  return out;
}

std::optional<SubsetMask> BeliefBase::try_mask_of(std::span<const Formula> formulas) const {
  SubsetMask mask = 0;
  for (const Formula& f : formulas) {
    auto idx = find(f);
    if (!idx) return std::nullopt;
    mask |= SubsetMask{1} << *idx;
  }
  return mask;
}

bool BeliefBase::operator==(const BeliefBase& other) const {
  return sig_ == other.sig_ && elements_ == other.elements_;
}

namespace {

// Precomputed per-element model bits; subset entailment is an and-fold.
struct EntailmentContext {
  const BeliefBase& base;
  ValuationBits f_bits;
  ValuationBits all_bits;
  std::vector<ValuationBits> element_bits;

  EntailmentContext(const BeliefBase& b, const Formula& f) : base(b) {
    const Signature& sig = b.signature();
    f_bits = models(f, sig).bits();
    all_bits = ModelSet::universe(sig).bits();
    element_bits.reserve(b.size());
    for (const Formula& e : b.elements()) element_bits.push_back(models(e, sig).bits());
  }

  ValuationBits subset_models(SubsetMask mask) const {
    ValuationBits bits = all_bits;
    while (mask) {
      const int i = std::countr_zero(mask);
      bits &= element_bits[static_cast<std::size_t>(i)];
      mask &= mask - 1;
    }
    return bits;
  }

  bool implies(SubsetMask mask) const { return (subset_models(mask) & ~f_bits) == 0; }
};

struct Families {
  std::vector<SubsetMask> remainders;
  std::vector<SubsetMask> kernels;
};

Families exhaustive_families(const EntailmentContext& ctx) {
  const std::size_t n = ctx.base.size();
  const std::size_t total = std::size_t{1} << n;
  std::vector<ValuationBits> sub(total);
  sub[0] = ctx.all_bits;
  for (std::size_t m = 1; m < total; ++m)
    sub[m] = sub[m & (m - 1)] & ctx.element_bits[static_cast<std::size_t>(std::countr_zero(m))];

  auto implies = [&](std::size_t m) { return (sub[m] & ~ctx.f_bits) == 0; };

  Families out;
  for (std::size_t m = 0; m < total; ++m) {
    if (implies(m)) {
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i)
        if ((m >> i) & 1u) minimal = !implies(m & ~(std::size_t{1} << i));
      if (minimal) out.kernels.push_back(m);
    } else {
      bool maximal = true;
      for (std::size_t i = 0; i < n && maximal; ++i)
        if (!((m >> i) & 1u)) maximal = implies(m | (std::size_t{1} << i));
      if (maximal) out.remainders.push_back(m);
    }
  }
  return out;
}

// All inclusion-minimal hitting sets of `sets` over `n` elements. A member
// equal to the empty set is unhittable, so no hitting set exists. No sets at
// all hit trivially: the result is {0}.
std::vector<SubsetMask> minimal_hitting_sets_impl(std::span<const SubsetMask> sets, std::size_t n) {
  (void)n;
  for (SubsetMask s : sets)
    if (s == 0) return {};
  std::vector<SubsetMask> found;
  std::vector<SubsetMask> stack_cur{0};
  std::vector<SubsetMask> stack_ban{0};
  while (!stack_cur.empty()) {
    const SubsetMask cur = stack_cur.back();
    const SubsetMask ban = stack_ban.back();
    stack_cur.pop_back();
    stack_ban.pop_back();
    SubsetMask unhit = 0;
    bool complete = true;
    for (SubsetMask s : sets)
      if ((s & cur) == 0) {
        unhit = s;
        complete = false;
        break;
      }
    if (complete) {
      found.push_back(cur);
      continue;
    }
    SubsetMask avail = unhit & ~ban;
    SubsetMask tried = 0;
    while (avail) {
      const int b = std::countr_zero(avail);
      const SubsetMask bit = SubsetMask{1} << b;
      stack_cur.push_back(cur | bit);
      stack_ban.push_back(ban | tried);
      tried |= bit;
      avail &= avail - 1;
    }
  }
  // Keep only inclusion-minimal candidates.
  std::sort(found.begin(), found.end(), [](SubsetMask a, SubsetMask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<SubsetMask> out;
  for (SubsetMask c : found) {
    bool minimal = true;
    for (SubsetMask kept : out)
      if ((kept & ~c) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  return out;
}

SubsetMask grow(const EntailmentContext& ctx, SubsetMask seed) {
  const std::size_t n = ctx.base.size();
  for (std::size_t i = 0; i < n; ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    if ((seed & bit) || ctx.implies(seed | bit)) continue;
    seed |= bit;
  }
  return seed;
}

SubsetMask shrink(const EntailmentContext& ctx, SubsetMask seed) {
  const std::size_t n = ctx.base.size();
  for (std::size_t i = 0; i < n; ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    if ((seed & bit) && ctx.implies(seed & ~bit)) seed &= ~bit;
  }
  return seed;
}

// Alternating extraction: pick a maximal unexplored seed (the complement of a
// minimal hitting set of the kernels found so far that is not inside a found
// remainder), then grow it to a remainder or shrink it to a kernel. Each
// round discovers a new family member, so the loop terminates with both
// families complete.
Families duality_families(const EntailmentContext& ctx) {
  const SubsetMask full = ctx.base.full_mask();
  Families out;
  while (true) {
    const auto candidates = minimal_hitting_sets_impl(out.kernels, ctx.base.size());
    bool advanced = false;
    for (SubsetMask d : candidates) {
      const SubsetMask seed = full & ~d;
      bool covered = false;
      for (SubsetMask r : out.remainders)
        if ((seed & ~r) == 0) {
          covered = true;
          break;
        }
      if (covered) continue;
      if (ctx.implies(seed))
        out.kernels.push_back(shrink(ctx, seed));
      else
        out.remainders.push_back(grow(ctx, seed));
      advanced = true;
      break;
    }
    if (!advanced) break;
  }
  return out;
}

Families compute_families(const EntailmentContext& ctx, EnumerationEngine engine,
                          std::size_t exhaustive_limit) {
  if (engine == EnumerationEngine::Auto)
    engine = ctx.base.size() <= exhaustive_limit ? EnumerationEngine::Exhaustive
                                                 : EnumerationEngine::Duality;
  if (engine == EnumerationEngine::Exhaustive && ctx.base.size() > exhaustive_limit)
    throw LimitError("exhaustive subset scan limited to " + std::to_string(exhaustive_limit) +
                     " elements, base has " + std::to_string(ctx.base.size()));
  return engine == EnumerationEngine::Exhaustive ? exhaustive_families(ctx)
                                                 : duality_families(ctx);
}

void sort_remainders(std::vector<SubsetMask>& masks) {
  std::sort(masks.begin(), masks.end());
}

void sort_kernels(std::vector<SubsetMask>& masks) {
  std::sort(masks.begin(), masks.end(), [](SubsetMask a, SubsetMask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return a < b;
  });
}

}  // namespace

SubsetFamily base_remainders(const BeliefBase& base, const Formula& f, EnumerationEngine engine,
                             std::size_t exhaustive_limit) {
  const EntailmentContext ctx(base, f);
  Families fam = compute_families(ctx, engine, exhaustive_limit);
  sort_remainders(fam.remainders);
  return SubsetFamily{FamilyKind::Remainder, std::move(fam.remainders)};
}

SubsetFamily base_kernels(const BeliefBase& base, const Formula& f, EnumerationEngine engine,
                          std::size_t exhaustive_limit) {
  const EntailmentContext ctx(base, f);
  Families fam = compute_families(ctx, engine, exhaustive_limit);
  sort_kernels(fam.kernels);
  return SubsetFamily{FamilyKind::Kernel, std::move(fam.kernels)};
}

std::vector<SubsetMask> apply_selection(const SubsetFamily& family, const SelectionSpec& spec,
                                        const BeliefBase& base) {
  if (family.kind != FamilyKind::Remainder)
    throw Error(ErrorKind::Input, "selection applies to remainder families");
  if (family.empty()) return {base.full_mask()};
  switch (spec.mode) {
    case SelectionSpec::Mode::All: return family.members;
    case SelectionSpec::Mode::First: return {family.members.front()};
    case SelectionSpec::Mode::Indices: {
      if (spec.indices.empty())
        throw InvalidChoiceError("selection must choose at least one remainder");
      std::vector<SubsetMask> out;
      for (std::size_t i : spec.indices) {
        if (i >= family.size())
          throw InvalidChoiceError("selection index " + std::to_string(i) +
                                   " out of range, family has " + std::to_string(family.size()));
        out.push_back(family.members[i]);
      }
      return out;
    }
  }
  return {};
}

BeliefBase base_partial_meet(const BeliefBase& base, const Formula& f, const SelectionSpec& spec) {
  const SubsetFamily family = base_remainders(base, f);
  const std::vector<SubsetMask> chosen = apply_selection(family, spec, base);
  SubsetMask meet = ~SubsetMask{0};
  for (SubsetMask m : chosen) meet &= m;
  return BeliefBase(base.signature(), base.materialize(meet & base.full_mask()));
}

std::vector<SubsetMask> minimal_incisions(const SubsetFamily& kernels) {
  if (kernels.kind != FamilyKind::Kernel)
    throw Error(ErrorKind::Input, "incisions apply to kernel families");
  // The empty kernel (a tautological target) is exempt from hitting.
  std::vector<SubsetMask> hittable;
  for (SubsetMask k : kernels.members)
    if (k != 0) hittable.push_back(k);
  auto out = minimal_hitting_sets_impl(hittable, kMaxBaseElements);
  sort_kernels(out);  // (cardinality, then bitmask)
  return out;
}

SubsetMask apply_incision(const SubsetFamily& kernels, const IncisionSpec& spec,
                          const BeliefBase& base) {
  if (kernels.kind != FamilyKind::Kernel)
    throw Error(ErrorKind::Input, "incisions apply to kernel families");
  SubsetMask union_mask = 0;
  for (SubsetMask k : kernels.members) union_mask |= k;
  switch (spec.mode) {
    case IncisionSpec::Mode::Maximum:
      return union_mask;
    case IncisionSpec::Mode::MinimalFirst: {
      const auto all = minimal_incisions(kernels);
      return all.empty() ? 0 : all.front();
    }
    case IncisionSpec::Mode::Explicit: {
      const auto mask = base.try_mask_of(spec.explicit_set);
      if (!mask)
        throw InvalidChoiceError("incision includes a formula that is not in the base");
      if ((*mask & ~union_mask) != 0) {
        const std::vector<Formula> outside = base.materialize(*mask & ~union_mask);
        throw InvalidChoiceError("invalid incision: '" + outside.front().text() +
                                 "' is not in the union of the kernels");
      }
      for (SubsetMask k : kernels.members)
        if (k != 0 && (k & *mask) == 0) {
          std::string names;
          for (const Formula& g : base.materialize(k))
            names += (names.empty() ? "" : ", ") + g.text();
          throw InvalidChoiceError("invalid incision: kernel {" + names + "} is not hit");
        }
      return *mask;
    }
  }
  return 0;
}

BeliefBase base_kernel_contraction(const BeliefBase& base, const Formula& f,
                                   const IncisionSpec& spec) {
  const SubsetFamily kernels = base_kernels(base, f);
  const SubsetMask incision = apply_incision(kernels, spec, base);
  return BeliefBase(base.signature(), base.materialize(base.full_mask() & ~incision));
}

BeliefBase saturated_base_kernel_contraction(const BeliefBase& base, const Formula& f,
                                             const IncisionSpec& spec, int atom_limit) {
  const BeliefBase contracted = base_kernel_contraction(base, f, spec);
  const ModelSet m = models(contracted.elements(), base.signature(), atom_limit);
  std::vector<Formula> kept;
  for (const Formula& e : base.elements())
    if (m.subset_of(models(e, base.signature(), atom_limit))) kept.push_back(e);
  return BeliefBase(base.signature(), std::move(kept));
}

BaseInfraView::BaseInfraView(const BeliefBase& base, SubsetFamily remainders)
    : remainders_(std::move(remainders)) {
  (void)base;
  if (!remainders_.empty()) {
    meet_ = ~SubsetMask{0};
    for (SubsetMask r : remainders_.members) meet_ &= r;
  }
}

bool BaseInfraView::contains(SubsetMask candidate) const {
  if (remainders_.empty()) return false;
  if ((meet_ & ~candidate) != 0) return false;
  for (SubsetMask r : remainders_.members)
    if ((candidate & ~r) == 0) return true;
  return false;
}

bool BaseInfraView::contains(std::span<const Formula> candidate, const BeliefBase& base) const {
  const auto mask = base.try_mask_of(candidate);
  return mask && contains(*mask);
}

SubsetFamily BaseInfraView::enumerate(std::size_t limit) const {
  if (remainders_.empty()) return SubsetFamily{FamilyKind::Infra, {}};
  std::vector<SubsetMask> out;
  std::size_t work = 0;
  for (SubsetMask r : remainders_.members) {
    const SubsetMask diff = r & ~meet_;
    const int width = std::popcount(diff);
    if (width > 22 || (work += std::size_t{1} << width) > (std::size_t{1} << 22))
      throw LimitError("infra remainder enumeration too large");
    SubsetMask sub = diff;
    while (true) {
      out.push_back(meet_ | sub);
      if (sub == 0) break;
      sub = (sub - 1) & diff;
    }
  }
  sort_kernels(out);  // (cardinality, then bitmask)
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > limit)
    throw LimitError("infra remainder family has " + std::to_string(out.size()) +
                     " members, limit is " + std::to_string(limit));
  return SubsetFamily{FamilyKind::Infra, std::move(out)};
}

BaseInfraView base_infra_remainders(const BeliefBase& base, const Formula& f) {
  return BaseInfraView(base, base_remainders(base, f));
}

BeliefBase base_infra_contraction(const BeliefBase& base, const Formula& f,
                                  const InfraSpec& spec) {
  const BaseInfraView view = base_infra_remainders(base, f);
  if (view.family_empty()) return base;
  switch (spec.mode) {
    case InfraSpec::Mode::MeetOfAll:
      return BeliefBase(base.signature(), base.materialize(view.meet()));
    case InfraSpec::Mode::RemainderIndex: {
      if (spec.remainder_index >= view.remainders().size())
        throw InvalidChoiceError("remainder index " + std::to_string(spec.remainder_index) +
                                 " out of range, family has " +
                                 std::to_string(view.remainders().size()));
      return BeliefBase(base.signature(),
                        base.materialize(view.remainders().members[spec.remainder_index]));
    }
    case InfraSpec::Mode::Explicit: {
      const auto mask = base.try_mask_of(spec.explicit_set);
      if (!mask || !view.contains(*mask))
        throw InvalidChoiceError(
            "invalid infra choice: the set is not between the meet of the remainders and a "
            "remainder");
      return BeliefBase(base.signature(), base.materialize(*mask));
    }
  }
  return base;
}

}  // namespace bc
