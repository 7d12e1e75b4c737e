#include "beliefchange/postulates.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "horn_internal.hpp"

namespace bc {

namespace {

std::vector<std::pair<Formula, std::size_t>> grid_order(const std::vector<Formula>& grid) {
  std::vector<std::pair<Formula, std::size_t>> keyed;
  keyed.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) keyed.emplace_back(grid[i], i);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return FormulaOrder{}(a.first, b.first); });
  for (std::size_t i = 1; i < keyed.size(); ++i)
    if (keyed[i].first == keyed[i - 1].first)
      throw Error(ErrorKind::Input,
                  "duplicate grid formula '" + keyed[i].first.text() + "' in contraction table");
  return keyed;
}

}  // namespace

ContractionTable ContractionTable::for_base(BeliefBase base, std::vector<Formula> grid,
                                            std::vector<std::vector<Formula>> outputs) {
  if (grid.size() != outputs.size())
    throw Error(ErrorKind::Input, "contraction table needs one output per grid formula");
  ContractionTable t(Subject::Base);
  for (const auto& [f, i] : grid_order(grid)) {
    t.grid_.push_back(f);
    std::vector<Formula> out = outputs[i];
    std::sort(out.begin(), out.end(), FormulaOrder{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    t.base_outputs_.push_back(std::move(out));
  }
  t.base_ = std::move(base);
  return t;
}

ContractionTable ContractionTable::for_prop(PropBeliefSet k, std::vector<Formula> grid,
                                            std::vector<PropBeliefSet> outputs) {
  if (grid.size() != outputs.size())
    throw Error(ErrorKind::Input, "contraction table needs one output per grid formula");
  ContractionTable t(Subject::PropSet);
  for (const auto& [f, i] : grid_order(grid)) {
    t.grid_.push_back(f);
    t.prop_outputs_.push_back(outputs[i]);
  }
  t.prop_ = std::move(k);
  return t;
}

ContractionTable ContractionTable::for_horn(HornBeliefSet h, std::vector<Formula> grid,
                                            std::vector<HornBeliefSet> outputs) {
  if (grid.size() != outputs.size())
    throw Error(ErrorKind::Input, "contraction table needs one output per grid formula");
  ContractionTable t(Subject::HornSet);
  for (const auto& [f, i] : grid_order(grid)) {
    t.grid_.push_back(f);
    t.horn_outputs_.push_back(outputs[i]);
  }
  t.horn_ = std::move(h);
  return t;
}

const Signature& ContractionTable::signature() const {
  switch (subject_) {
    case Subject::Base: return base_->signature();
    case Subject::PropSet: return prop_->signature();
    case Subject::HornSet: return horn_->signature();
  }
  throw Error(ErrorKind::Input, "corrupt contraction table");
}

namespace {

std::string subject_name(ContractionTable::Subject s) {
  switch (s) {
    case ContractionTable::Subject::Base: return "base";
    case ContractionTable::Subject::PropSet: return "prop-set";
    case ContractionTable::Subject::HornSet: return "horn-set";
  }
  return "?";
}

std::vector<Formula> parse_all(const nlohmann::json& arr, const Signature& sig) {
  std::vector<Formula> out;
  for (const auto& item : arr) out.push_back(parse(item.get<std::string>(), sig));
  return out;
}

}  // namespace

ContractionTable ContractionTable::from_json(const nlohmann::json& j) try {
  const std::string kind = j.at("subject").get<std::string>();
  const Signature sig(j.at("signature").get<std::vector<std::string>>());
  const std::vector<Formula> elements = parse_all(j.at("elements"), sig);

  std::vector<Formula> grid;
  std::vector<std::vector<Formula>> raw_outputs;
  for (const auto& [key, value] : j.at("entries").items()) {
    grid.push_back(parse(key, sig));
    raw_outputs.push_back(parse_all(value, sig));
  }

  if (kind == "base") return for_base(BeliefBase(sig, elements), grid, raw_outputs);
  if (kind == "prop-set") {
    std::vector<PropBeliefSet> outputs;
    for (const auto& fs : raw_outputs) outputs.push_back(theory_of(models(fs, sig)));
    return for_prop(theory_of(models(elements, sig)), grid, std::move(outputs));
  }
  if (kind == "horn-set") {
    std::vector<HornBeliefSet> outputs;
    for (const auto& fs : raw_outputs) outputs.push_back(HornBeliefSet::from_formulas(sig, fs));
    return for_horn(HornBeliefSet::from_formulas(sig, elements), grid, std::move(outputs));
  }
  throw Error(ErrorKind::Input, "unknown table subject '" + kind + "'");
} catch (const nlohmann::json::exception& e) {
  throw Error(ErrorKind::Input, std::string("malformed contraction table: ") + e.what());
}

nlohmann::json ContractionTable::to_json() const {
  nlohmann::json j;
  j["subject"] = subject_name(subject_);
  j["signature"] = signature().names();

  auto texts = [](const std::vector<Formula>& fs) {
    std::vector<std::string> out;
    for (const Formula& f : fs) out.push_back(f.text());
    return out;
  };
  auto horn_texts = [](const HornBeliefSet& h) {
    std::vector<std::string> out;
    for (const HornClause& c : h.generators()) out.push_back(c.to_string(h.signature()));
    return out;
  };

  nlohmann::json entries = nlohmann::json::object();
  switch (subject_) {
    case Subject::Base:
      j["elements"] = texts(base_->elements());
      for (std::size_t i = 0; i < grid_.size(); ++i)
        entries[grid_[i].text()] = texts(base_outputs_[i]);
      break;
    case Subject::PropSet:
      j["elements"] = std::vector<std::string>{formula_with_models(prop_->model_set()).text()};
      for (std::size_t i = 0; i < grid_.size(); ++i)
        entries[grid_[i].text()] =
            std::vector<std::string>{formula_with_models(prop_outputs_[i].model_set()).text()};
      break;
    case Subject::HornSet:
      j["elements"] = horn_texts(*horn_);
      for (std::size_t i = 0; i < grid_.size(); ++i)
        entries[grid_[i].text()] = horn_texts(horn_outputs_[i]);
      break;
  }
  j["entries"] = std::move(entries);
  return j;
}

nlohmann::json Counterexample::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  if (phi) j["phi"] = phi->text();
  if (psi) j["psi"] = psi->text();
  if (witness) j["witness"] = witness->text();
  if (!witness_set.empty()) {
    std::vector<std::string> texts;
    for (const Formula& f : witness_set) texts.push_back(f.text());
    j["witness_set"] = texts;
  }
  if (!note.empty()) j["note"] = note;
  return j;
}

nlohmann::json PostulateReport::to_json() const {
  nlohmann::json j;
  j["postulate"] = postulate;
  j["verdict"] = pass ? "pass" : "fail";
  if (counterexample) j["counterexample"] = counterexample->to_json();
  return j;
}

// ---------------------------------------------------------------------------
// Name resolution
// ---------------------------------------------------------------------------

std::vector<std::string> postulates_for(ContractionTable::Subject subject) {
  switch (subject) {
    case ContractionTable::Subject::Base: return {"B-1", "B-2", "B-3", "B-4", "B-5"};
    case ContractionTable::Subject::PropSet:
      return {"K-1", "K-2", "K-3", "K-4", "K-5", "K-6"};
    case ContractionTable::Subject::HornSet:
      return {"K-1", "K-2", "K-3", "K-4", "K-5", "K-6", "core-retainment", "H-e6", "H-e7"};
  }
  return {};
}

namespace {

std::string canonical_postulate(const std::string& name, ContractionTable::Subject subject) {
  const bool base = subject == ContractionTable::Subject::Base;
  static const std::map<std::string, std::pair<const char*, const char*>> aliases = {
      // alias -> {canonical for set subjects, canonical for bases}
      {"closure", {"K-1", nullptr}},       {"inclusion", {"K-2", "B-2"}},
      {"vacuity", {"K-3", nullptr}},       {"success", {"K-4", "B-1"}},
      {"extensionality", {"K-5", nullptr}},{"recovery", {"K-6", nullptr}},
      {"uniformity", {nullptr, "B-3"}},    {"relevance", {nullptr, "B-4"}},
      {"core-retainment", {"core-retainment", "B-5"}}, {"failure", {"H-e7", nullptr}},
  };
  std::string canon = name;
  if (auto it = aliases.find(name); it != aliases.end()) {
    const char* resolved = base ? it->second.second : it->second.first;
    if (resolved) canon = resolved;
  }
  const auto valid = postulates_for(subject);
  if (std::find(valid.begin(), valid.end(), canon) == valid.end())
    throw Error(ErrorKind::Input, "unknown postulate '" + name + "' for subject '" +
                                      subject_name(subject) + "'");
  return canon;
}

PostulateReport pass_report(std::string name) { return {std::move(name), true, std::nullopt}; }

PostulateReport fail_report(std::string name, Counterexample ce) {
  return {std::move(name), false, std::move(ce)};
}

// ---------------------------------------------------------------------------
// Base subject
// ---------------------------------------------------------------------------

struct BaseChecker {
  const ContractionTable& t;
  const BeliefBase& b;
  const Signature& sig;
  std::vector<ValuationBits> elem_bits;
  ValuationBits all_bits;

  explicit BaseChecker(const ContractionTable& table)
      : t(table), b(table.base()), sig(table.signature()) {
    all_bits = ModelSet::universe(sig).bits();
    for (const Formula& e : b.elements()) elem_bits.push_back(models(e, sig).bits());
  }

  ValuationBits subset_bits(SubsetMask m) const {
    ValuationBits bits = all_bits;
    while (m) {
      bits &= elem_bits[static_cast<std::size_t>(std::countr_zero(m))];
      m &= m - 1;
    }
    return bits;
  }

  ValuationBits formula_bits(const Formula& f) const { return models(f, sig).bits(); }

  ValuationBits output_bits(std::size_t i) const {
    return models(t.base_outputs()[i], sig).bits();
  }

  // Output as a mask when it is a subset of B.
  std::optional<SubsetMask> output_mask(std::size_t i) const {
    return b.try_mask_of(t.base_outputs()[i]);
  }

  PostulateReport success() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i) {
      const ValuationBits fb = formula_bits(t.grid()[i]);
      if (fb == all_bits) continue;
      if ((output_bits(i) & ~fb) == 0)
        return fail_report("B-1", {t.grid()[i], {}, {}, t.base_outputs()[i],
                                   "the output still entails the formula"});
    }
    return pass_report("B-1");
  }

  PostulateReport inclusion() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      for (const Formula& f : t.base_outputs()[i])
        if (!b.find(f))
          return fail_report("B-2", {t.grid()[i], {}, f, {}, "output element outside the base"});
    return pass_report("B-2");
  }

  PostulateReport uniformity() const {
    if (b.size() > kDefaultExhaustiveLimit)
      throw LimitError("uniformity check over more than " +
                       std::to_string(kDefaultExhaustiveLimit) + " base elements");
    // subset entailment profile of each grid formula
    const std::size_t total = std::size_t{1} << b.size();
    std::vector<ValuationBits> sub(total);
    sub[0] = all_bits;
    for (std::size_t m = 1; m < total; ++m)
      sub[m] = sub[m & (m - 1)] & elem_bits[static_cast<std::size_t>(std::countr_zero(m))];
    std::vector<std::vector<bool>> profile(t.grid().size(), std::vector<bool>(total));
    for (std::size_t i = 0; i < t.grid().size(); ++i) {
      const ValuationBits fb = formula_bits(t.grid()[i]);
      for (std::size_t m = 0; m < total; ++m) profile[i][m] = (sub[m] & ~fb) == 0;
    }
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      for (std::size_t j = i + 1; j < t.grid().size(); ++j)
        if (profile[i] == profile[j] && t.base_outputs()[i] != t.base_outputs()[j])
          return fail_report("B-3", {t.grid()[i], t.grid()[j], {}, {},
                                     "uniform formulas with different outputs"});
    return pass_report("B-3");
  }

  // shared scheme of Relevance and Core-retainment: B' ranges over supersets
  // of the output (B-4) or arbitrary subsets (B-5)
  PostulateReport retainment(bool anchored) const {
    const char* name = anchored ? "B-4" : "B-5";
    if (b.size() > kDefaultExhaustiveLimit)
      throw LimitError("subset search over more than " + std::to_string(kDefaultExhaustiveLimit) +
                       " base elements");
    for (std::size_t i = 0; i < t.grid().size(); ++i) {
      const Formula& phi = t.grid()[i];
      const ValuationBits fb = formula_bits(phi);
      const auto out_mask = output_mask(i);
      if (!out_mask)
        return fail_report(name, {phi, {}, {}, {}, "output is not a subset of the base"});
      const SubsetMask removed = b.full_mask() & ~*out_mask;
      for (std::size_t e = 0; e < b.size(); ++e) {
        if (!((removed >> e) & 1u)) continue;
        const Formula& psi = b.element(e);
        const ValuationBits psi_bits = elem_bits[e];
        const SubsetMask base_mask = anchored ? *out_mask : 0;
        const SubsetMask free_mask = b.full_mask() & ~base_mask;
        bool found = false;
        SubsetMask add = free_mask;
        while (true) {
          const SubsetMask candidate = base_mask | add;
          const ValuationBits cand_bits = subset_bits(candidate);
          if ((cand_bits & ~fb) != 0 && ((cand_bits & psi_bits) & ~fb) == 0) {
            found = true;
            break;
          }
          if (add == 0) break;
          add = (add - 1) & free_mask;
        }
        if (!found)
          return fail_report(name, {phi, psi, {}, {},
                                    "no witness subset blames the removed sentence"});
      }
    }
    return pass_report(name);
  }
};

// ---------------------------------------------------------------------------
// Propositional belief set subject
// ---------------------------------------------------------------------------

struct PropChecker {
  const ContractionTable& t;
  const Signature& sig;
  ValuationBits k_bits;
  ValuationBits all_bits;

  explicit PropChecker(const ContractionTable& table) : t(table), sig(table.signature()) {
    k_bits = t.prop_subject().model_set().bits();
    all_bits = ModelSet::universe(sig).bits();
  }

  ValuationBits fb(std::size_t i) const { return models(t.grid()[i], sig).bits(); }
  ValuationBits xb(std::size_t i) const { return t.prop_outputs()[i].model_set().bits(); }
  bool in_k(std::size_t i) const { return (k_bits & ~fb(i)) == 0; }

  PostulateReport closure() const { return pass_report("K-1"); }  // representational

  PostulateReport inclusion() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      if ((k_bits & ~xb(i)) != 0)
        return fail_report("K-2", {t.grid()[i], {}, {}, {}, "output is not a subset of K"});
    return pass_report("K-2");
  }

  PostulateReport vacuity() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      if (!in_k(i) && xb(i) != k_bits)
        return fail_report("K-3", {t.grid()[i], {}, {}, {}, "changed K on a non-member"});
    return pass_report("K-3");
  }

  PostulateReport success() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      if (fb(i) != all_bits && (xb(i) & ~fb(i)) == 0)
        return fail_report("K-4", {t.grid()[i], {}, {}, {}, "output still entails the formula"});
    return pass_report("K-4");
  }

  PostulateReport extensionality() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      for (std::size_t j = i + 1; j < t.grid().size(); ++j)
        if (fb(i) == fb(j) && xb(i) != xb(j))
          return fail_report("K-5", {t.grid()[i], t.grid()[j], {}, {},
                                     "equivalent formulas with different outputs"});
    return pass_report("K-5");
  }

  PostulateReport recovery() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i) {
      if (!in_k(i)) continue;
      if ((xb(i) & fb(i)) != k_bits) {
        Counterexample ce{t.grid()[i], {}, {}, {}, ""};
        ce.note = "adding the formula back does not restore K";
        ce.witness = formula_with_models(ModelSet(sig, xb(i) & fb(i)));
        return fail_report("K-6", std::move(ce));
      }
    }
    return pass_report("K-6");
  }
};

// ---------------------------------------------------------------------------
// Horn belief set subject
// ---------------------------------------------------------------------------

struct HornChecker {
  const ContractionTable& t;
  const Signature& sig;
  detail::HornContext ctx;
  detail::ClauseMask h_mask;
  ValuationBits h_bits;

  explicit HornChecker(const ContractionTable& table)
      : t(table), sig(table.signature()), ctx(sig) {
    h_mask = ctx.mask_of(t.horn_subject().clauses());
    h_bits = ctx.models_of(h_mask);
  }

  ValuationBits fb(std::size_t i) const { return detail::horn_formula_bits(ctx, sig, t.grid()[i]); }
  detail::ClauseMask xm(std::size_t i) const {
    return ctx.mask_of(t.horn_outputs()[i].clauses());
  }
  bool in_h(std::size_t i) const { return (h_bits & ~fb(i)) == 0; }

  Formula clause_formula(std::size_t index) const {
    return ctx.universe.at(index).to_formula(sig);
  }

  PostulateReport closure() const { return pass_report("K-1"); }  // closed by construction

  PostulateReport inclusion() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      if ((xm(i) & ~h_mask) != 0)
        return fail_report("K-2", {t.grid()[i], {}, {}, {}, "output is not a subset of H"});
    return pass_report("K-2");
  }

  PostulateReport vacuity() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      if (!in_h(i) && xm(i) != h_mask)
        return fail_report("K-3", {t.grid()[i], {}, {}, {}, "changed H on a non-member"});
    return pass_report("K-3");
  }

  PostulateReport success() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      if (fb(i) != ctx.all_bits && (ctx.models_of(xm(i)) & ~fb(i)) == 0)
        return fail_report("K-4", {t.grid()[i], {}, {}, {}, "output still entails the formula"});
    return pass_report("K-4");
  }

  PostulateReport extensionality() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      for (std::size_t j = i + 1; j < t.grid().size(); ++j)
        if (fb(i) == fb(j) && xm(i) != xm(j))
          return fail_report("K-5", {t.grid()[i], t.grid()[j], {}, {},
                                     "equivalent formulas with different outputs"});
    return pass_report("K-5");
  }

  PostulateReport recovery() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i) {
      if (!in_h(i)) continue;
      const detail::ClauseMask recovered = ctx.theory_at(ctx.models_of(xm(i)) & fb(i));
      if (recovered != h_mask) {
        const detail::ClauseMask missing = h_mask & ~recovered;
        Counterexample ce{t.grid()[i], {}, {}, {}, "adding the formula back does not restore H"};
        if (missing != 0)
          ce.witness = clause_formula(static_cast<std::size_t>(std::countr_zero(missing)));
        return fail_report("K-6", std::move(ce));
      }
    }
    return pass_report("K-6");
  }

  PostulateReport failure() const {
    for (std::size_t i = 0; i < t.grid().size(); ++i)
      if (fb(i) == ctx.all_bits && xm(i) != h_mask)
        return fail_report("H-e7", {t.grid()[i], {}, {}, {}, "changed H on a tautology"});
    return pass_report("H-e7");
  }

  // shared scheme of (H-e6) and Core-retainment: the witness set X ranges
  // over subsets of H above the meet of the e-remainders (H-e6) or over
  // arbitrary subsets of H (core-retainment)
  PostulateReport retainment(bool anchored) const {
    const char* name = anchored ? "H-e6" : "core-retainment";
    if (std::popcount(h_mask) > static_cast<int>(kDefaultExhaustiveLimit))
      throw LimitError("subset search over more than " + std::to_string(kDefaultExhaustiveLimit) +
                       " clauses");
    for (std::size_t i = 0; i < t.grid().size(); ++i) {
      const Formula& phi = t.grid()[i];
      const ValuationBits phi_bits = fb(i);
      detail::ClauseMask floor = 0;
      if (anchored) {
        const auto rem = detail::horn_remainder_masks(ctx, h_mask, h_bits, phi_bits);
        floor = h_mask;  // meet over an empty family is H itself
        for (detail::ClauseMask r : rem) floor &= r;
      }
      const detail::ClauseMask removed = h_mask & ~xm(i);
      const detail::ClauseMask free_mask = h_mask & ~floor;
      detail::ClauseMask psi = removed;
      while (psi) {
        const std::size_t e = static_cast<std::size_t>(std::countr_zero(psi));
        psi &= psi - 1;
        const ValuationBits psi_bits = ctx.clause_bits[e];
        bool found = false;
        detail::ClauseMask add = free_mask;
        while (true) {
          const ValuationBits cand = ctx.models_of(floor | add);
          if ((cand & ~phi_bits) != 0 && ((cand & psi_bits) & ~phi_bits) == 0) {
            found = true;
            break;
          }
          if (add == 0) break;
          add = (add - 1) & free_mask;
        }
        if (!found)
          return fail_report(name, {phi, clause_formula(e), {}, {},
                                    "no witness subset blames the removed clause"});
      }
    }
    return pass_report(name);
  }
};

}  // namespace

PostulateReport check(const ContractionTable& table, const std::string& postulate) {
  const std::string name = canonical_postulate(postulate, table.subject());

  if (table.subject() == ContractionTable::Subject::Base) {
    const BaseChecker c(table);
    if (name == "B-1") return c.success();
    if (name == "B-2") return c.inclusion();
    if (name == "B-3") return c.uniformity();
    if (name == "B-4") return c.retainment(true);
    return c.retainment(false);  // B-5
  }

  if (table.subject() == ContractionTable::Subject::PropSet) {
    const PropChecker c(table);
    if (name == "K-1") return c.closure();
    if (name == "K-2") return c.inclusion();
    if (name == "K-3") return c.vacuity();
    if (name == "K-4") return c.success();
    if (name == "K-5") return c.extensionality();
    return c.recovery();  // K-6
  }

  const HornChecker c(table);
  if (name == "K-1") return c.closure();
  if (name == "K-2") return c.inclusion();
  if (name == "K-3") return c.vacuity();
  if (name == "K-4") return c.success();
  if (name == "K-5") return c.extensionality();
  if (name == "K-6") return c.recovery();
  if (name == "H-e7") return c.failure();
  if (name == "H-e6") return c.retainment(true);
  return c.retainment(false);  // core-retainment
}

std::vector<Formula> default_grid(const Signature& sig, ContractionTable::Subject subject) {
  if (subject == ContractionTable::Subject::HornSet) {
    std::vector<Formula> out;
    for (const HornClause& c : enumerate_clauses(sig)) out.push_back(c.to_formula(sig));
    return out;
  }
  return representatives(ModelSet(sig, 0)).formulas();
}

}  // namespace bc
