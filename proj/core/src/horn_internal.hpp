#pragma once

#include <bit>
#include <span>
#include <vector>

#include "beliefchange/horn_change.hpp"
#include "beliefchange/semantics.hpp"

namespace bc::detail {

using ClauseMask = std::uint64_t;

// Clause-mask workspace over one signature: the clause universe, per-clause
// model bits, and the closure maps between clause masks and valuation sets.
struct HornContext {
  ClauseUniverse universe;
  std::vector<ValuationBits> clause_bits;
  ValuationBits all_bits;

  explicit HornContext(const Signature& sig) : universe(sig) {
    if (universe.size() > 64)
      throw LimitError("horn operations are limited to 64-clause universes");
    all_bits = ModelSet::universe(sig).bits();
    clause_bits.reserve(universe.size());
    for (const HornClause& c : universe.clauses())
      clause_bits.push_back(clause_models(c, sig));
  }

  ClauseMask mask_of(std::span<const HornClause> clauses) const {
    ClauseMask m = 0;
    for (const HornClause& c : clauses) {
      const auto idx = universe.index_of(c);
      if (!idx) throw Error(ErrorKind::Input, "clause outside the universe");
      m |= ClauseMask{1} << *idx;
    }
    return m;
  }

  ValuationBits models_of(ClauseMask m) const {
    ValuationBits bits = all_bits;
    while (m) {
      bits &= clause_bits[static_cast<std::size_t>(std::countr_zero(m))];
      m &= m - 1;
    }
    return bits;
  }

  ClauseMask theory_at(ValuationBits v) const {
    ClauseMask m = 0;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if ((v & ~clause_bits[i]) == 0) m |= ClauseMask{1} << i;
    return m;
  }

  bool closed(ClauseMask m) const { return theory_at(models_of(m)) == m; }

  std::vector<HornClause> materialize(ClauseMask m) const {
    std::vector<HornClause> out;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if ((m >> i) & 1u) out.push_back(universe.at(i));
    return out;
  }

  HornBeliefSet to_set(const Signature& sig, ClauseMask m) const {
    return HornBeliefSet(sig, materialize(m));
  }
};

// Model bits of a Horn formula's clause set; throws on non-Horn input.
// All bits exactly when f is a Horn tautology.
inline ValuationBits horn_formula_bits(const HornContext& ctx, const Signature& sig,
                                       const Formula& f) {
  const HornDecomposition d = as_horn_clauses(f);
  if (!d.is_horn())
    throw InvalidChoiceError("'" + f.text() + "' is not a Horn formula (offending part: '" +
                             d.offending().text() + "')");
  ValuationBits bits = ctx.all_bits;
  for (const HornClause& c : d.clauses()) bits &= clause_models(c, sig);
  return bits;
}

// Maximal closed subsets of h_mask whose models are not inside f_bits.
// Candidates are read off valuation supersets of [H]; every closed subset of
// H arises that way. Ascending clause-mask order.
inline std::vector<ClauseMask> horn_remainder_masks(const HornContext& ctx, ClauseMask h_mask,
                                                    ValuationBits h_bits, ValuationBits f_bits) {
  if ((ctx.all_bits & ~f_bits) == 0) return {};  // tautology
  if ((h_bits & ~f_bits) != 0) return {h_mask};  // H does not entail f
  std::vector<ClauseMask> candidates;
  const ValuationBits rest = ctx.all_bits & ~h_bits;
  ValuationBits extra = rest;
  while (true) {
    const ClauseMask s = ctx.theory_at(h_bits | extra) & h_mask;
    if ((ctx.models_of(s) & ~f_bits) != 0) candidates.push_back(s);
    if (extra == 0) break;
    extra = (extra - 1) & rest;
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<ClauseMask> out;
  for (ClauseMask c : candidates) {
    bool maximal = true;
    for (ClauseMask d : candidates)
      if (c != d && (c & ~d) == 0) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

}  // namespace bc::detail
