#include "beliefchange/semantics.hpp"

#include <algorithm>
#include <bit>

namespace bc {

namespace {

void check_atom_limit(const Signature& sig, int atom_limit, const char* what) {
  if (sig.size() > atom_limit)
    throw LimitError(std::string(what) + " limited to " + std::to_string(atom_limit) +
                     " atoms, signature has " + std::to_string(sig.size()));
  if (sig.size() > 5)
    throw LimitError(std::string(what) + " supports at most 5 atoms");
}

}  // namespace

Valuation::Valuation(Signature sig, unsigned index) : sig_(std::move(sig)), index_(index) {
  if (index >= (1u << sig_.size()))
    throw Error(ErrorKind::Input, "valuation index out of range for signature");
}

bool Valuation::value(int atom) const {
  return (index_ >> (sig_.size() - 1 - atom)) & 1u;
}

std::string Valuation::pattern() const {
  std::string out;
  for (int i = 0; i < sig_.size(); ++i) out += value(i) ? '1' : '0';
  return out;
}

Valuation valuation_meet(const Valuation& a, const Valuation& b) {
  if (a.signature() != b.signature())
    throw Error(ErrorKind::Input, "valuation meet across different signatures");
  return Valuation(a.signature(), a.index() & b.index());
}

ModelSet::ModelSet(Signature sig, ValuationBits bits) : sig_(std::move(sig)), bits_(bits) {
  if (sig_.size() > 5) throw LimitError("model sets support at most 5 atoms");
}

ModelSet ModelSet::universe(const Signature& sig) {
  ModelSet m(sig);
  m.bits_ = static_cast<ValuationBits>((1ull << (1u << sig.size())) - 1);
  return m;
}

std::size_t ModelSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

ModelSet ModelSet::intersect(const ModelSet& other) const {
  return ModelSet(sig_, bits_ & other.bits_);
}

ModelSet ModelSet::unite(const ModelSet& other) const {
  return ModelSet(sig_, bits_ | other.bits_);
}

ModelSet ModelSet::complement() const {
  return ModelSet(sig_, universe(sig_).bits_ & ~bits_);
}

ModelSet ModelSet::with(unsigned index) const {
  return ModelSet(sig_, bits_ | (ValuationBits{1} << index));
}

std::vector<Valuation> ModelSet::members() const {
  std::vector<Valuation> out;
  for (unsigned i = 0; i < valuation_count(); ++i)
    if (contains(i)) out.emplace_back(sig_, i);
  return out;
}

std::vector<std::string> ModelSet::patterns() const {
  std::vector<std::string> out;
  for (const Valuation& v : members()) out.push_back(v.pattern());
  return out;
}

bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return v.value(f.atom_index());
    case Formula::Kind::Top: return true;
    case Formula::Kind::Not: return !evaluate(f.child(), v);
    case Formula::Kind::And: return evaluate(f.left(), v) && evaluate(f.right(), v);
  }
  return false;
}

ModelSet models(std::span<const Formula> formulas, const Signature& sig, int atom_limit) {
  check_atom_limit(sig, atom_limit, "model enumeration");
  for (const Formula& f : formulas)
    if (f.max_atom_index() >= sig.size())
      throw Error(ErrorKind::Input, "formula '" + f.text() + "' uses atoms outside the signature");
  ValuationBits bits = 0;
  for (unsigned i = 0; i < (1u << sig.size()); ++i) {
    const Valuation v(sig, i);
    bool all = true;
    for (const Formula& f : formulas)
      if (!evaluate(f, v)) {
        all = false;
        break;
      }
    if (all) bits |= ValuationBits{1} << i;
  }
  return ModelSet(sig, bits);
}

ModelSet models(const Formula& f, const Signature& sig, int atom_limit) {
  return models(std::span<const Formula>(&f, 1), sig, atom_limit);
}

bool entails(std::span<const Formula> premises, const Formula& conclusion, const Signature& sig,
             int atom_limit) {
  return models(premises, sig, atom_limit).subset_of(models(conclusion, sig, atom_limit));
}

bool is_tautology(const Formula& f, const Signature& sig, int atom_limit) {
  return models(f, sig, atom_limit) == ModelSet::universe(sig);
}

ValuationBits clause_models(const HornClause& clause, const Signature& sig) {
  ValuationBits bits = 0;
  const int n = sig.size();
  for (unsigned i = 0; i < (1u << n); ++i) {
    bool body_true = true;
    for (int a : clause.body_atoms())
      if (!((i >> (n - 1 - a)) & 1u)) {
        body_true = false;
        break;
      }
    bool truth = true;
    if (body_true)
      truth = !clause.has_falsum_head() && ((i >> (n - 1 - clause.head())) & 1u);
    if (truth) bits |= ValuationBits{1} << i;
  }
  return bits;
}

bool horn_entails(std::span<const HornClause> premises, std::uint32_t goal_body, int goal_head) {
  if (goal_head != HornClause::kFalsumHead && ((goal_body >> goal_head) & 1u))
    return true;  // tautological goal
  std::uint32_t derived = goal_body;
  bool inconsistent = false;
  bool changed = true;
  while (changed && !inconsistent) {
    changed = false;
    for (const HornClause& c : premises) {
      if ((c.body_mask() & ~derived) != 0) continue;
      if (c.has_falsum_head()) {
        inconsistent = true;
        break;
      }
      const std::uint32_t bit = std::uint32_t{1} << c.head();
      if (!(derived & bit)) {
        derived |= bit;
        changed = true;
      }
    }
  }
  if (inconsistent) return true;
  if (goal_head == HornClause::kFalsumHead) return false;
  return (derived >> goal_head) & 1u;
}

bool horn_entails(std::span<const HornClause> premises, const HornClause& goal) {
  return horn_entails(premises, goal.body_mask(), goal.head());
}

std::vector<HornClause> horn_closure(std::span<const HornClause> clauses, const Signature& sig,
                                     int atom_limit) {
  std::vector<HornClause> out;
  for (const HornClause& c : enumerate_clauses(sig, atom_limit))
    if (horn_entails(clauses, c)) out.push_back(c);
  return out;
}

ModelSet intersection_closure(const ModelSet& v) {
  ValuationBits bits = v.bits();
  bool changed = true;
  while (changed) {
    changed = false;
    for (unsigned i = 0; i < v.valuation_count(); ++i) {
      if (!((bits >> i) & 1u)) continue;
      for (unsigned j = i + 1; j < v.valuation_count(); ++j) {
        if (!((bits >> j) & 1u)) continue;
        const unsigned meet = i & j;
        if (!((bits >> meet) & 1u)) {
          bits |= ValuationBits{1} << meet;
          changed = true;
        }
      }
    }
  }
  return ModelSet(v.signature(), bits);
}

bool PropBeliefSet::contains(const Formula& f) const {
  return models_.subset_of(models(f, models_.signature()));
}

PropBeliefSet theory_of(const ModelSet& v) { return PropBeliefSet(v); }

Formula formula_with_models(const ModelSet& v) {
  const Signature& sig = v.signature();
  if (v == ModelSet::universe(sig)) return Formula::top();
  if (v.empty()) return Formula::bottom();
  std::vector<Formula> minterms;
  for (const Valuation& m : v.members()) {
    std::vector<Formula> literals;
    for (int a = 0; a < sig.size(); ++a) {
      const Formula atom = Formula::atom(sig, a);
      literals.push_back(m.value(a) ? atom : Formula::negation(atom));
    }
    minterms.push_back(Formula::conjoin(literals));
  }
  Formula out = minterms.back();
  for (std::size_t i = minterms.size() - 1; i-- > 0;)
    out = Formula::disjunction(minterms[i], out);
  return out;
}

RepresentativeSet representatives(const ModelSet& v, std::size_t limit) {
  const Signature& sig = v.signature();
  const unsigned vals = v.valuation_count();
  const std::size_t count = std::size_t{1} << (vals - v.size());
  if (count > limit)
    throw LimitError("representative set would have " + std::to_string(count) +
                     " classes, limit is " + std::to_string(limit));
  const ValuationBits rest = ModelSet::universe(sig).bits() & ~v.bits();
  std::vector<Formula> out;
  // Enumerate supersets of v.bits(): v | (every submask of the complement).
  ValuationBits sub = rest;
  while (true) {
    out.push_back(formula_with_models(ModelSet(sig, v.bits() | sub)));
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  std::sort(out.begin(), out.end(), FormulaOrder{});
  return RepresentativeSet(std::move(out));
}

}  // namespace bc
