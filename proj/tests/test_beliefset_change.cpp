#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "beliefchange/beliefset_change.hpp"

using namespace bc;

namespace {

Signature sig_pq() { return Signature({"p", "q"}); }
Signature sig_pqr() { return Signature({"p", "q", "r"}); }

PropBeliefSet cn(const Signature& s, std::initializer_list<const char*> generators) {
  std::vector<Formula> fs;
  for (const char* g : generators) fs.push_back(parse(g, s));
  return theory_of(models(fs, s));
}

std::set<ValuationBits> model_bits(const std::vector<PropBeliefSet>& theories) {
  std::set<ValuationBits> out;
  for (const PropBeliefSet& t : theories) out.insert(t.model_set().bits());
  return out;
}

std::set<std::vector<std::string>> kernel_texts(const BsKernelFamily& fam) {
  std::set<std::vector<std::string>> out;
  for (SubsetMask m : fam.kernels.members) {
    std::vector<std::string> member;
    for (const Formula& f : fam.base.materialize(m)) member.push_back(f.text());
    out.insert(member);
  }
  return out;
}

}  // namespace

TEST_CASE("bs remainders") {
  const Signature s = sig_pq();
  const PropBeliefSet k = cn(s, {"p & q"});

  SUBCASE("one remainder per countermodel") {
    const auto fam = bs_remainders(k, parse("p", s));
    REQUIRE(fam.size() == 2);
    CHECK(model_bits(fam) == model_bits({cn(s, {"q"}), cn(s, {"p <-> q"})}));
  }
  SUBCASE("tautology") { CHECK(bs_remainders(k, parse("p -> p", s)).empty()); }
  SUBCASE("non-member") {
    const PropBeliefSet weak = cn(s, {"p -> q"});
    const auto fam = bs_remainders(weak, parse("p & q", s));
    REQUIRE(fam.size() == 1);
    CHECK(fam[0] == weak);
  }
  SUBCASE("remainders are maximal") {
    for (const PropBeliefSet& r : bs_remainders(k, parse("p", s))) {
      CHECK_FALSE(r.contains(parse("p", s)));
      CHECK(r.model_set().size() == k.model_set().size() + 1);
    }
  }
}

TEST_CASE("bs contract") {
  const Signature s = sig_pq();
  const PropBeliefSet k = cn(s, {"p & q"});
  const Formula p = parse("p", s);

  SUBCASE("full meet") {
    CHECK(bs_contract(k, p, BsFullMeet{}) == cn(s, {"p -> q"}));
  }
  SUBCASE("maxichoice at a chosen countermodel") {
    CHECK(bs_contract(k, p, BsMaxichoice{Valuation(s, 0b01)}) == cn(s, {"q"}));
    CHECK_THROWS_AS(bs_contract(k, p, BsMaxichoice{Valuation(s, 0b11)}), InvalidChoiceError);
  }
  SUBCASE("partial meet over a countermodel set") {
    const PropBeliefSet out =
        bs_contract(k, p, BsPartialMeet{ModelSet(s, 0b0011)});  // valuations 00 and 01
    CHECK(out == cn(s, {"p -> q"}));
    CHECK_THROWS_AS(bs_contract(k, p, BsPartialMeet{ModelSet(s, 0)}), InvalidChoiceError);
    CHECK_THROWS_AS(bs_contract(k, p, BsPartialMeet{ModelSet(s, 0b1000)}), InvalidChoiceError);
  }
  SUBCASE("vacuity and failure") {
    CHECK(bs_contract(k, parse("p | q | ~p", s), BsFullMeet{}) == k);
    const PropBeliefSet weak = cn(s, {"p -> q"});
    CHECK(bs_contract(weak, parse("p & q", s), BsFullMeet{}) == weak);
  }
  SUBCASE("success") {
    for (unsigned w = 0; w < 4; ++w) {
      const Valuation v(s, w);
      if (v.value(0)) continue;  // not a countermodel of p
      CHECK_FALSE(bs_contract(k, p, BsMaxichoice{v}).contains(p));
    }
  }
}

TEST_CASE("bs kernel contraction with closure") {
  const Signature s = sig_pqr();
  const PropBeliefSet k = cn(s, {"p -> q", "q -> r"});
  const Formula f = parse("p -> r", s);
  const std::vector<Formula> incision = {parse("p -> r", s), parse("p -> q", s),
                                         parse("p & q -> r", s)};

  // without closure: the contracted representative base entails p & q -> r
  // but no longer contains it
  const BeliefBase reps = representative_base(k, RepresentativeDomain::HornClauses);
  const BeliefBase raw =
      base_kernel_contraction(reps, f, IncisionSpec::explicit_set_of(incision));
  CHECK_FALSE(raw.find(parse("p & q -> r", s)).has_value());
  CHECK(entails(raw.elements(), parse("p & q -> r", s), s));

  // with closure the clause is back
  const PropBeliefSet closed = bs_contract(
      k, f, BsKernel{IncisionSpec::explicit_set_of(incision), RepresentativeDomain::HornClauses});
  CHECK(closed.contains(parse("p & q -> r", s)));
  CHECK_FALSE(closed.contains(f));

  // saturation on a representative base equals belief set kernel contraction
  // and puts the entailed clause back as an element
  const BeliefBase saturated =
      saturated_base_kernel_contraction(reps, f, IncisionSpec::explicit_set_of(incision));
  CHECK(theory_of(models(saturated.elements(), s)) == closed);
  CHECK(saturated.find(parse("p & q -> r", s)).has_value());
  for (const Formula& e : saturated.elements()) CHECK(closed.contains(e));
}

TEST_CASE("bs kernels over the horn-clause fragment") {
  const Signature s = sig_pqr();
  const PropBeliefSet k = cn(s, {"p -> q", "q -> r"});
  const auto fam = bs_kernels(k, parse("p -> r", s), RepresentativeDomain::HornClauses);
  CHECK(fam.base.size() == 5);
  CHECK(kernel_texts(fam) ==
        std::set<std::vector<std::string>>{{"p -> r"},
                                           {"p -> q", "q -> r"},
                                           {"p -> q", "p & q -> r"}});
}

TEST_CASE("full representative kernels extend the fragment kernels") {
  const Signature s = sig_pq();
  const PropBeliefSet k = cn(s, {"p & q"});
  const Formula f = parse("p", s);
  const auto frag = bs_kernels(k, f, RepresentativeDomain::HornClauses);
  const auto full = bs_kernels(k, f, RepresentativeDomain::Full);
  CHECK(full.base.size() == 8);

  // compare kernels as sets of equivalence classes (model-bit sets)
  auto classes = [&](const BsKernelFamily& fam) {
    std::set<std::set<ValuationBits>> out;
    for (SubsetMask m : fam.kernels.members) {
      std::set<ValuationBits> member;
      for (const Formula& g : fam.base.materialize(m)) member.insert(models(g, s).bits());
      out.insert(member);
    }
    return out;
  };
  const auto frag_classes = classes(frag);
  const auto full_classes = classes(full);
  for (const auto& m : frag_classes) CHECK(full_classes.contains(m));
  CHECK(full_classes.size() > frag_classes.size());
}

TEST_CASE("bs kernels on tiny theories") {
  const Signature one({"p"});
  const PropBeliefSet k = theory_of(models(parse("p", one), one));
  const auto fam = bs_kernels(k, parse("p", one), RepresentativeDomain::Full);
  REQUIRE(fam.kernels.size() == 1);
  const auto member = fam.base.materialize(fam.kernels.members[0]);
  REQUIRE(member.size() == 1);
  CHECK(models(member[0], one) == models(parse("p", one), one));

  // the tautology target has the empty kernel
  const auto taut = bs_kernels(k, parse("p -> p", one), RepresentativeDomain::Full);
  REQUIRE(taut.kernels.size() == 1);
  CHECK(taut.kernels.members[0] == 0);
}

TEST_CASE("bs infra remainders") {
  const Signature s = sig_pq();
  const PropBeliefSet k = cn(s, {"p & q"});
  const Formula p = parse("p", s);
  const BsInfraView view = bs_infra_remainders(k, p);

  SUBCASE("three members") {
    const auto fam = view.enumerate();
    REQUIRE(fam.size() == 3);
    CHECK(model_bits(fam) ==
          model_bits({cn(s, {"q"}), cn(s, {"p <-> q"}), cn(s, {"p -> q"})}));
    for (const PropBeliefSet& t : fam) CHECK(view.contains(t));
  }
  SUBCASE("every remainder is a member, and so are meets of members") {
    for (const PropBeliefSet& r : bs_remainders(k, p)) CHECK(view.contains(r));
    const auto fam = view.enumerate();
    for (const PropBeliefSet& a : fam)
      for (const PropBeliefSet& b : fam)
        CHECK(view.contains(theory_of(a.model_set().unite(b.model_set()))));
  }
  SUBCASE("non-members") {
    CHECK_FALSE(view.contains(k));
    CHECK_FALSE(view.contains(theory_of(ModelSet::universe(s))));
  }
  SUBCASE("tautology: empty family") {
    const BsInfraView none = bs_infra_remainders(k, parse("p -> p", s));
    CHECK(none.family_empty());
    CHECK(none.enumerate().empty());
  }
  SUBCASE("enumeration limit") { CHECK_THROWS_AS(view.enumerate(2), LimitError); }
  SUBCASE("non-member formula: family is {K}") {
    const PropBeliefSet weak = cn(s, {"p -> q"});
    const BsInfraView v = bs_infra_remainders(weak, parse("p & q", s));
    CHECK_FALSE(v.family_empty());
    CHECK(v.contains(weak));
    const auto fam = v.enumerate();
    REQUIRE(fam.size() == 1);
    CHECK(fam[0] == weak);
  }
}

TEST_CASE("convexity: infra, partial meet and the sandwich coincide") {
  // exhaustive over all theories and contingent members at two atoms
  const Signature s = sig_pq();
  for (ValuationBits kb = 0; kb < 16; ++kb) {
    const PropBeliefSet k = theory_of(ModelSet(s, kb));
    for (ValuationBits fb = 1; fb < 15; ++fb) {
      const ModelSet fm(s, fb);
      if (!k.model_set().subset_of(fm)) continue;  // only contract members
      const Formula f = formula_with_models(fm);

      const BsInfraView view = bs_infra_remainders(k, f);
      const auto infra = view.enumerate();
      std::set<ValuationBits> infra_bits = model_bits(infra);

      // partial meet outcomes over every non-empty countermodel set
      std::set<ValuationBits> pm_bits;
      const ValuationBits counter = fm.complement().bits();
      for (ValuationBits v = counter;; v = (v - 1) & counter) {
        if (v != 0)
          pm_bits.insert(
              bs_contract(k, f, BsPartialMeet{ModelSet(s, v)}).model_set().bits());
        if (v == 0) break;
      }

      // the sandwich: theories between full meet and some maxichoice
      std::set<ValuationBits> sandwich;
      for (ValuationBits xb = 0; xb < 16; ++xb) {
        const ValuationBits extra = xb & ~kb;
        const bool covers_k = (kb & ~xb) == 0;
        if (covers_k && extra != 0 && (extra & ~counter) == 0) sandwich.insert(xb);
      }

      CHECK(infra_bits == pm_bits);
      CHECK(infra_bits == sandwich);
    }
  }
}

TEST_CASE("kernel, partial meet and infra outcomes coincide for belief sets") {
  // exhaustive at two atoms: every valid incision's closed outcome is an
  // infra member and vice versa
  const Signature s = sig_pq();
  for (ValuationBits kb = 0; kb < 16; ++kb) {
    const PropBeliefSet k = theory_of(ModelSet(s, kb));
    for (ValuationBits fb = 1; fb < 15; ++fb) {
      const ModelSet fm(s, fb);
      if (!k.model_set().subset_of(fm)) continue;
      const Formula f = formula_with_models(fm);

      const auto fam = bs_kernels(k, f, RepresentativeDomain::Full);
      SubsetMask union_mask = 0;
      for (SubsetMask m : fam.kernels.members) union_mask |= m;

      std::set<ValuationBits> kernel_bits;
      SubsetMask sigma = union_mask;
      while (true) {
        bool valid = true;
        for (SubsetMask m : fam.kernels.members)
          if (m != 0 && (m & sigma) == 0) {
            valid = false;
            break;
          }
        if (valid) {
          const auto rest = fam.base.materialize(fam.base.full_mask() & ~sigma);
          kernel_bits.insert(models(rest, s).bits());
        }
        if (sigma == 0) break;
        sigma = (sigma - 1) & union_mask;
      }

      const std::set<ValuationBits> infra_bits = model_bits(bs_infra_remainders(k, f).enumerate());
      CHECK(kernel_bits == infra_bits);
    }
  }
}
