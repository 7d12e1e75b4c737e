#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "beliefchange/postulates.hpp"

using namespace bc;

namespace {

Signature sig_pq() { return Signature({"p", "q"}); }
Signature sig_pqr() { return Signature({"p", "q", "r"}); }

BeliefBase example2_base() {
  const Signature s = sig_pqr();
  return BeliefBase(s, {parse("p -> q", s), parse("q -> r", s), parse("p & q -> r", s),
                        parse("p & r -> q", s)});
}

BeliefBase example3_base() {
  const Signature s = sig_pq();
  return BeliefBase(s, {parse("p", s), parse("p | q", s), parse("p <-> q", s)});
}

std::vector<Formula> horn_grid(const Signature& s) {
  return default_grid(s, ContractionTable::Subject::HornSet);
}

ContractionTable partial_meet_table(const BeliefBase& b, const SelectionSpec& spec) {
  const auto grid = horn_grid(b.signature());
  std::vector<std::vector<Formula>> outputs;
  for (const Formula& f : grid) outputs.push_back(base_partial_meet(b, f, spec).elements());
  return ContractionTable::for_base(b, grid, outputs);
}

ContractionTable kernel_table(const BeliefBase& b, const IncisionSpec& spec) {
  const auto grid = horn_grid(b.signature());
  std::vector<std::vector<Formula>> outputs;
  for (const Formula& f : grid) outputs.push_back(base_kernel_contraction(b, f, spec).elements());
  return ContractionTable::for_base(b, grid, outputs);
}

ContractionTable horn_full_meet_table(const HornBeliefSet& h) {
  const auto grid = horn_grid(h.signature());
  std::vector<HornBeliefSet> outputs;
  for (const Formula& f : grid)
    outputs.push_back(e_contract(h, f, EContractMethod::full_meet()));
  return ContractionTable::for_horn(h, grid, outputs);
}

}  // namespace

TEST_CASE("partial meet satisfies the base postulates") {
  const ContractionTable t = partial_meet_table(example2_base(), SelectionSpec::all());
  for (const char* p : {"B-1", "B-2", "B-3", "B-4", "B-5"}) {
    const PostulateReport r = check(t, p);
    CHECK_MESSAGE(r.pass, p);
  }
  // a maxichoice selection passes as well
  const ContractionTable t2 = partial_meet_table(example2_base(), SelectionSpec::first());
  for (const char* p : {"B-1", "B-2", "B-3", "B-4"}) CHECK(check(t2, p).pass);
}

TEST_CASE("the example kernel operator separates relevance from core-retainment") {
  const Signature s = sig_pq();
  const BeliefBase b = example3_base();
  const Formula f = parse("p & q", s);
  const BeliefBase out = base_kernel_contraction(
      b, f, IncisionSpec::explicit_set_of({parse("p | q", s), parse("p <-> q", s)}));
  const ContractionTable t =
      ContractionTable::for_base(b, {f}, {out.elements()});

  const PostulateReport relevance = check(t, "B-4");
  CHECK_FALSE(relevance.pass);
  REQUIRE(relevance.counterexample.has_value());
  CHECK(relevance.counterexample->phi->text() == "p & q");
  CHECK(relevance.counterexample->psi->text() == "p | q");

  CHECK(check(t, "B-5").pass);
  CHECK(check(t, "B-1").pass);
  CHECK(check(t, "B-2").pass);
}

TEST_CASE("kernel contraction satisfies success, inclusion, uniformity, core-retainment") {
  for (const IncisionSpec& spec : {IncisionSpec::maximum(), IncisionSpec::minimal_first()}) {
    const ContractionTable t = kernel_table(example2_base(), spec);
    for (const char* p : {"B-1", "B-2", "B-3", "B-5"}) {
      const PostulateReport r = check(t, p);
      CHECK_MESSAGE(r.pass, p);
    }
  }
}

TEST_CASE("uniformity catches inconsistent outputs on uniform formulas") {
  const Signature s = sig_pq();
  const BeliefBase b(s, {parse("p", s), parse("q", s)});
  // p & q and q & p are uniform over any base; give them different outputs
  const ContractionTable t = ContractionTable::for_base(
      b, {parse("p & q", s), parse("q & p", s)},
      {{parse("p", s)}, {parse("q", s)}});
  const PostulateReport r = check(t, "B-3");
  CHECK_FALSE(r.pass);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->phi->text() == "p & q");
  CHECK(r.counterexample->psi->text() == "q & p");
}

TEST_CASE("prop belief set operators satisfy the six basic postulates") {
  const Signature s = sig_pq();
  const PropBeliefSet k = theory_of(models(parse("p & q", s), s));
  const auto grid = default_grid(s, ContractionTable::Subject::PropSet);
  REQUIRE(grid.size() == 16);

  std::vector<PropBeliefSet> outputs;
  for (const Formula& f : grid) outputs.push_back(bs_contract(k, f, BsFullMeet{}));
  const ContractionTable t = ContractionTable::for_prop(k, grid, outputs);
  for (const char* p : {"K-1", "K-2", "K-3", "K-4", "K-5", "K-6"}) {
    const PostulateReport r = check(t, p);
    CHECK_MESSAGE(r.pass, p);
  }
}

TEST_CASE("extensionality catches equivalent formulas mapped apart") {
  const Signature s = sig_pq();
  const PropBeliefSet k = theory_of(models(parse("p & q", s), s));
  const Formula a = parse("p & q", s);
  const Formula b = parse("q & p", s);
  const ContractionTable t = ContractionTable::for_prop(
      k, {a, b},
      {bs_contract(k, a, BsFullMeet{}), bs_contract(k, b, BsMaxichoice{Valuation(s, 0b00)})});
  const PostulateReport r = check(t, "K-5");
  CHECK_FALSE(r.pass);
  // the same table is fine under the other postulates
  CHECK(check(t, "K-2").pass);
  CHECK(check(t, "K-4").pass);
}

TEST_CASE("recovery fails for horn full meet with the expected witness") {
  const Signature s = sig_pqr();
  const HornBeliefSet h =
      HornBeliefSet::from_formulas(s, std::vector<Formula>{parse("p -> q", s), parse("q -> r", s)});
  const Formula f = parse("p -> r", s);
  const ContractionTable t = ContractionTable::for_horn(
      h, {f}, {e_contract(h, f, EContractMethod::full_meet())});

  const PostulateReport r = check(t, "K-6");
  CHECK_FALSE(r.pass);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->phi->text() == "p -> r");
  REQUIRE(r.counterexample->witness.has_value());
  CHECK(r.counterexample->witness->text() == "q -> r");
}

TEST_CASE("horn infra outcomes pass the characterization postulates") {
  const Signature s = sig_pqr();
  const HornBeliefSet h =
      HornBeliefSet::from_formulas(s, std::vector<Formula>{parse("p -> q", s), parse("q -> r", s)});
  const ContractionTable t = horn_full_meet_table(h);
  for (const char* p : {"K-1", "K-2", "K-4", "K-5", "core-retainment", "H-e6", "H-e7", "K-3"}) {
    const PostulateReport r = check(t, p);
    CHECK_MESSAGE(r.pass, p);
  }
}

TEST_CASE("derived postulates follow on every tested table") {
  // whenever Inclusion and Core-retainment hold, Vacuity and Failure hold
  const Signature s = sig_pqr();
  const HornBeliefSet h =
      HornBeliefSet::from_formulas(s, std::vector<Formula>{parse("p & q", s)});
  const ContractionTable t = horn_full_meet_table(h);
  REQUIRE(check(t, "K-2").pass);
  REQUIRE(check(t, "core-retainment").pass);
  CHECK(check(t, "K-3").pass);
  CHECK(check(t, "H-e7").pass);
}

TEST_CASE("failure postulate catches tautology edits") {
  const Signature s = sig_pq();
  const HornBeliefSet h =
      HornBeliefSet::from_formulas(s, std::vector<Formula>{parse("p", s)});
  const HornBeliefSet smaller = HornBeliefSet::from_formulas(s, std::vector<Formula>{});
  const ContractionTable t =
      ContractionTable::for_horn(h, {parse("p -> p", s)}, {smaller});
  CHECK_FALSE(check(t, "H-e7").pass);
  CHECK(check(t, "K-2").pass);  // inclusion still holds
  CHECK(check(t, "K-3").pass);  // vacuity is silent: a tautology is in H
}

TEST_CASE("postulate name handling") {
  const Signature s = sig_pq();
  const BeliefBase b(s, {parse("p", s)});
  const ContractionTable t = ContractionTable::for_base(b, {parse("p", s)}, {{}});
  CHECK(check(t, "success").postulate == "B-1");
  CHECK(check(t, "core-retainment").postulate == "B-5");
  CHECK_THROWS_AS(check(t, "K-1"), Error);
  CHECK_THROWS_AS(check(t, "nonsense"), Error);
  CHECK(postulates_for(ContractionTable::Subject::HornSet).size() == 9);
}

TEST_CASE("table json io") {
  const Signature s = sig_pq();
  const BeliefBase b = example3_base();
  const Formula f = parse("p & q", s);
  const ContractionTable t =
      ContractionTable::for_base(b, {f}, {{parse("p", s)}});
  const nlohmann::json j = t.to_json();
  CHECK(j["subject"] == "base");
  CHECK(j["entries"].contains("p & q"));

  const ContractionTable back = ContractionTable::from_json(j);
  CHECK(back.subject() == ContractionTable::Subject::Base);
  CHECK(back.base() == b);
  REQUIRE(back.grid().size() == 1);
  CHECK(back.grid()[0] == f);
  CHECK(back.base_outputs()[0] == std::vector<Formula>{parse("p", s)});

  // a horn table normalizes to generators but keeps the same theories
  const HornBeliefSet h =
      HornBeliefSet::from_formulas(s, std::vector<Formula>{parse("p", s), parse("q", s)});
  const ContractionTable ht = ContractionTable::for_horn(
      h, {parse("p", s)}, {HornBeliefSet::from_formulas(s, std::vector<Formula>{parse("q", s)})});
  const ContractionTable hback = ContractionTable::from_json(ht.to_json());
  CHECK(hback.horn_subject() == h);
  CHECK(hback.horn_outputs()[0].clauses() ==
        HornBeliefSet::from_formulas(s, std::vector<Formula>{parse("q", s)}).clauses());

  CHECK_THROWS_AS(ContractionTable::from_json(nlohmann::json{{"subject", "weird"}}), Error);
}

TEST_CASE("duplicate grid entries are rejected") {
  const Signature s = sig_pq();
  const BeliefBase b(s, {parse("p", s)});
  CHECK_THROWS_AS(
      ContractionTable::for_base(b, {parse("p", s), parse("p", s)}, {{}, {}}), Error);
}
