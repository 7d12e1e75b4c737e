#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "beliefchange/horn_change.hpp"

using namespace bc;

namespace {

Signature sig_pq() { return Signature({"p", "q"}); }
Signature sig_pqr() { return Signature({"p", "q", "r"}); }

HornBeliefSet cnh(const Signature& s, std::initializer_list<const char*> generators) {
  std::vector<Formula> fs;
  for (const char* g : generators) fs.push_back(parse(g, s));
  return HornBeliefSet::from_formulas(s, fs);
}

std::set<std::vector<std::string>> clause_texts(const std::vector<HornBeliefSet>& family) {
  std::set<std::vector<std::string>> out;
  for (const HornBeliefSet& h : family) {
    std::vector<std::string> member;
    for (const HornClause& c : h.clauses()) member.push_back(c.to_string(h.signature()));
    out.insert(member);
  }
  return out;
}

std::vector<std::string> clause_texts(const HornBeliefSet& h) {
  std::vector<std::string> out;
  for (const HornClause& c : h.clauses()) out.push_back(c.to_string(h.signature()));
  return out;
}

}  // namespace

TEST_CASE("horn belief sets are closures") {
  const Signature s = sig_pqr();
  const HornBeliefSet h = cnh(s, {"p -> q", "q -> r"});
  CHECK(clause_texts(h) ==
        std::vector<std::string>{"p -> q", "p -> r", "q -> r", "p & q -> r", "p & r -> q"});
  CHECK(h.contains(*HornClause::make(0b101, 1)));
  CHECK(h.entails(parse("p -> r", s)));
  CHECK_FALSE(h.entails(parse("r -> p", s)));
  CHECK_THROWS_AS(h.entails(parse("p | q", s)), InvalidChoiceError);
  CHECK_THROWS_AS(cnh(s, {"p | q"}), InvalidChoiceError);

  // closure is a fixpoint
  CHECK(HornBeliefSet(s, h.clauses()) == h);
}

TEST_CASE("generators are irredundant") {
  const Signature s = sig_pqr();
  const HornBeliefSet h = cnh(s, {"p -> q", "q -> r"});
  const auto gen = h.generators();
  CHECK(gen.size() == 2);
  CHECK(HornBeliefSet(s, gen) == h);
  CHECK(h.generator_text() == "(p -> q) & (q -> r)");
  CHECK(cnh(s, {"p & r -> q"}).generator_text() == "p & r -> q");
  CHECK(cnh(s, {"T"}).generator_text() == "T");
}

TEST_CASE("e-remainders") {
  const Signature s = sig_pqr();

  SUBCASE("two remainders for the chain") {
    const HornBeliefSet h = cnh(s, {"p -> q", "q -> r"});
    const auto fam = e_remainders(h, parse("p -> r", s));
    REQUIRE(fam.size() == 2);
    CHECK(fam[0] == cnh(s, {"p -> q"}));
    CHECK(fam[1] == cnh(s, {"q -> r", "p & r -> q"}));
    for (const HornBeliefSet& r : fam) {
      CHECK_FALSE(r.entails(parse("p -> r", s)));
      // every e-remainder is itself a Horn belief set
      CHECK(HornBeliefSet(s, r.clauses()) == r);
    }
  }
  SUBCASE("three remainders for a conjunction of facts") {
    const HornBeliefSet h = cnh(s, {"p & q"});
    const auto fam = e_remainders(h, parse("p & q", s));
    REQUIRE(fam.size() == 3);
    CHECK(clause_texts(fam) ==
          clause_texts({cnh(s, {"p", "r -> q"}), cnh(s, {"q", "r -> p"}),
                        cnh(s, {"p -> q", "q -> p", "r -> p", "r -> q"})}));
  }
  SUBCASE("tautology") {
    const HornBeliefSet h = cnh(s, {"p -> q"});
    CHECK(e_remainders(h, parse("p -> p", s)).empty());
    CHECK(e_remainders(h, parse("T", s)).empty());
  }
  SUBCASE("non-consequence: H is the sole remainder") {
    const HornBeliefSet h = cnh(s, {"p -> q"});
    const auto fam = e_remainders(h, parse("q -> r", s));
    REQUIRE(fam.size() == 1);
    CHECK(fam[0] == h);
  }
  SUBCASE("non-horn input") {
    const HornBeliefSet h = cnh(s, {"p -> q"});
    CHECK_THROWS_AS(e_remainders(h, parse("p | q", s)), InvalidChoiceError);
  }
}

TEST_CASE("e-contraction") {
  const Signature s = sig_pqr();
  const HornBeliefSet h = cnh(s, {"p -> q", "q -> r"});
  const Formula f = parse("p -> r", s);

  SUBCASE("full meet") {
    CHECK(e_contract(h, f, EContractMethod::full_meet()) == cnh(s, {"p & r -> q"}));
  }
  SUBCASE("maxichoice takes the first remainder") {
    CHECK(e_contract(h, f, EContractMethod::maxichoice()) == cnh(s, {"p -> q"}));
  }
  SUBCASE("explicit selection") {
    CHECK(e_contract(h, f, EContractMethod::partial_meet(SelectionSpec::at({1}))) ==
          cnh(s, {"q -> r", "p & r -> q"}));
    CHECK(e_contract(h, f, EContractMethod::partial_meet(SelectionSpec::at({0, 1}))) ==
          e_contract(h, f, EContractMethod::full_meet()));
    CHECK_THROWS_AS(e_contract(h, f, EContractMethod::partial_meet(SelectionSpec::at({5}))),
                    InvalidChoiceError);
  }
  SUBCASE("vacuity and failure") {
    CHECK(e_contract(h, parse("r -> p", s), EContractMethod::full_meet()) == h);
    CHECK(e_contract(h, parse("T", s), EContractMethod::maxichoice()) == h);
  }
  SUBCASE("full meet of the fact conjunction keeps the meet clauses") {
    const HornBeliefSet facts = cnh(s, {"p & q"});
    const HornBeliefSet out = e_contract(facts, parse("p & q", s), EContractMethod::full_meet());
    CHECK(out.contains(*HornClause::make(0b100, 0)));  // r -> p
    CHECK(out.contains(*HornClause::make(0b100, 1)));  // r -> q
    // and is exactly the clause intersection of the three remainders
    const auto fam = e_remainders(facts, parse("p & q", s));
    std::vector<HornClause> meet = fam[0].clauses();
    for (const HornBeliefSet& r : fam) {
      std::vector<HornClause> next;
      std::set_intersection(meet.begin(), meet.end(), r.clauses().begin(), r.clauses().end(),
                            std::back_inserter(next));
      meet = std::move(next);
    }
    CHECK(out.clauses() == meet);
  }
}

TEST_CASE("orderly maxichoice") {
  const Signature s = sig_pqr();
  const HornBeliefSet h = cnh(s, {"p -> q", "q -> r"});
  const Formula f = parse("p -> r", s);

  SUBCASE("deterministic and always a remainder") {
    const HornBeliefSet a = e_contract(h, f, EContractMethod::orderly_maxichoice());
    const HornBeliefSet b = e_contract(h, f, EContractMethod::orderly_maxichoice());
    CHECK(a == b);
    const auto fam = e_remainders(h, f);
    CHECK(std::count(fam.begin(), fam.end(), a) == 1);
  }
  SUBCASE("the default key picks the highest generator text") {
    // "(q -> r) & (p & r -> q)" is longer than "p -> q"
    CHECK(e_contract(h, f, EContractMethod::orderly_maxichoice()) ==
          cnh(s, {"q -> r", "p & r -> q"}));
  }
  SUBCASE("a custom key reverses the choice") {
    HornOrderSpec reversed{[](const HornBeliefSet& x) {
      std::string k = x.generator_text();
      return std::string(40 - k.size(), 'z');  // shorter text scores higher
    }};
    CHECK(e_contract(h, f, EContractMethod::orderly_maxichoice(reversed)) == cnh(s, {"p -> q"}));
  }
}

TEST_CASE("infra e-remainders on the chain") {
  const Signature s = sig_pqr();
  const HornBeliefSet h = cnh(s, {"p -> q", "q -> r"});
  const Formula f = parse("p -> r", s);
  const HornInfraView view = infra_e_remainders(h, f);

  SUBCASE("membership distinguishes the convexity gap") {
    CHECK(view.contains(cnh(s, {"p & q -> r", "p & r -> q"})));
    CHECK_FALSE(view.contains(cnh(s, {"q -> r"})));
  }
  SUBCASE("enumeration walks closed sets only") {
    const auto fam = view.enumerate();
    REQUIRE(fam.size() == 4);
    CHECK(clause_texts(fam) ==
          clause_texts({cnh(s, {"p & r -> q"}), cnh(s, {"p -> q"}),
                        cnh(s, {"p & q -> r", "p & r -> q"}), cnh(s, {"q -> r", "p & r -> q"})}));
    for (const HornBeliefSet& m : fam) {
      CHECK(view.contains(m));
      CHECK(HornBeliefSet(s, m.clauses()) == m);
    }
  }
  SUBCASE("every e-remainder and every meet of e-remainders is a member") {
    const auto fam = e_remainders(h, f);
    for (const HornBeliefSet& r : fam) CHECK(view.contains(r));
    CHECK(view.contains(view.meet()));
  }
  SUBCASE("enumeration limit") { CHECK_THROWS_AS(view.enumerate(1), LimitError); }
  SUBCASE("the convexity gap set differs from all partial meet outcomes") {
    const HornBeliefSet gap = cnh(s, {"p & q -> r", "p & r -> q"});
    const std::vector<HornBeliefSet> pm = {
        e_contract(h, f, EContractMethod::maxichoice()),
        e_contract(h, f, EContractMethod::partial_meet(SelectionSpec::at({1}))),
        e_contract(h, f, EContractMethod::full_meet())};
    for (const HornBeliefSet& out : pm) CHECK(gap != out);
  }
}

TEST_CASE("infra e-contraction") {
  const Signature s = sig_pqr();
  const HornBeliefSet h = cnh(s, {"p -> q", "q -> r"});
  const Formula f = parse("p -> r", s);

  SUBCASE("explicit choice") {
    const HornBeliefSet out = infra_e_contraction(
        h, f, HornInfraSpec::explicit_set_of({parse("p & q -> r", s), parse("p & r -> q", s)}));
    CHECK(out == cnh(s, {"p & q -> r", "p & r -> q"}));
  }
  SUBCASE("invalid choice") {
    CHECK_THROWS_AS(infra_e_contraction(h, f, HornInfraSpec::explicit_set_of({parse("q -> r", s)})),
                    InvalidChoiceError);
  }
  SUBCASE("failure clause") {
    CHECK(infra_e_contraction(h, parse("T", s), HornInfraSpec::meet_of_all()) == h);
  }
  SUBCASE("meet of all equals full meet") {
    CHECK(infra_e_contraction(h, f, HornInfraSpec::meet_of_all()) ==
          e_contract(h, f, EContractMethod::full_meet()));
  }
}

TEST_CASE("horn kernel e-contraction") {
  const Signature s = sig_pqr();
  const HornBeliefSet h = cnh(s, {"p -> q", "q -> r"});
  const Formula f = parse("p -> r", s);

  SUBCASE("the explicit incision lands on the second maxichoice outcome") {
    const HornBeliefSet out = horn_kernel_e_contraction(
        h, f,
        IncisionSpec::explicit_set_of(
            {parse("p -> r", s), parse("p -> q", s), parse("p & q -> r", s)}));
    CHECK(out == cnh(s, {"q -> r", "p & r -> q"}));
  }
  SUBCASE("maximum incision equals full meet e-contraction") {
    CHECK(horn_kernel_e_contraction(h, f, IncisionSpec::maximum()) ==
          e_contract(h, f, EContractMethod::full_meet()));
  }
  SUBCASE("closure stability and infra membership") {
    const HornInfraView view = infra_e_remainders(h, f);
    for (const IncisionSpec& spec :
         {IncisionSpec::maximum(), IncisionSpec::minimal_first()}) {
      const HornBeliefSet out = horn_kernel_e_contraction(h, f, spec);
      CHECK(HornBeliefSet(s, out.clauses()) == out);
      CHECK(view.contains(out));
    }
  }
  SUBCASE("kernel outcomes over all valid incisions equal the infra family") {
    std::vector<Formula> elements;
    for (const HornClause& c : h.clauses()) elements.push_back(c.to_formula(s));
    const BeliefBase base(s, elements);
    const auto kernels = base_kernels(base, f);
    SubsetMask union_mask = 0;
    for (SubsetMask k : kernels.members) union_mask |= k;

    std::set<std::vector<std::string>> outcomes;
    SubsetMask sigma = union_mask;
    while (true) {
      bool valid = true;
      for (SubsetMask k : kernels.members)
        if (k != 0 && (k & sigma) == 0) {
          valid = false;
          break;
        }
      if (valid) {
        const HornBeliefSet out = HornBeliefSet::from_formulas(
            s, base.materialize(base.full_mask() & ~sigma));
        outcomes.insert(clause_texts(out));
      }
      if (sigma == 0) break;
      sigma = (sigma - 1) & union_mask;
    }
    CHECK(outcomes == clause_texts(infra_e_remainders(h, f).enumerate()));
  }
}

TEST_CASE("recovery fails for horn contraction") {
  const Signature s = sig_pqr();
  const HornBeliefSet h = cnh(s, {"p -> q", "q -> r"});
  const Formula f = parse("p -> r", s);
  const HornBeliefSet contracted = e_contract(h, f, EContractMethod::full_meet());
  std::vector<Formula> regenerate;
  for (const HornClause& c : contracted.clauses()) regenerate.push_back(c.to_formula(s));
  regenerate.push_back(f);
  const HornBeliefSet recovered = HornBeliefSet::from_formulas(s, regenerate);
  CHECK(recovered != h);
  CHECK_FALSE(recovered.contains(*HornClause::make(0b010, 2)));  // q -> r is lost
  CHECK(h.contains(*HornClause::make(0b010, 2)));
}

TEST_CASE("decomposability witness search") {
  const Signature s = sig_pq();

  SUBCASE("no witness for the fact above an implication") {
    const std::vector<HornClause> x = {*HornClause::make(0, 1)};        // q
    const std::vector<HornClause> xp = {*HornClause::make(0b01, 1)};    // p -> q
    CHECK_FALSE(decomposability_witness(x, xp, s).has_value());
  }
  SUBCASE("a witness exists when the strict part is regenerable") {
    const std::vector<HornClause> x = {*HornClause::make(0, 0), *HornClause::make(0, 1)};  // p, q
    const std::vector<HornClause> xp = {*HornClause::make(0, 0)};                          // p
    const auto witness = decomposability_witness(x, xp, s);
    REQUIRE(witness.has_value());
    // the witness regenerates Cn(X) together with X' and stays strictly below
    const HornBeliefSet full(s, x);
    std::vector<HornClause> joined = *witness;
    joined.push_back(*HornClause::make(0, 0));
    CHECK(HornBeliefSet(s, joined) == full);
    CHECK(HornBeliefSet(s, *witness) != full);
  }
  SUBCASE("precondition violations") {
    const std::vector<HornClause> x = {*HornClause::make(0, 1)};
    const std::vector<HornClause> same = {*HornClause::make(0, 1)};
    CHECK_THROWS_AS(decomposability_witness(x, same, s), InvalidChoiceError);
    const std::vector<HornClause> empty;
    CHECK_THROWS_AS(decomposability_witness(x, empty, s), InvalidChoiceError);
  }
}
