#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>

#include "beliefchange/formula.hpp"
#include "beliefchange/semantics.hpp"

using namespace bc;

namespace {

Signature sig_pq() { return Signature({"p", "q"}); }
Signature sig_pqr() { return Signature({"p", "q", "r"}); }

ModelSet set_of(const Signature& s, std::initializer_list<const char*> patterns) {
  ValuationBits bits = 0;
  for (const char* pat : patterns) {
    unsigned idx = 0;
    for (const char* c = pat; *c; ++c) idx = idx * 2 + (*c == '1');
    bits |= ValuationBits{1} << idx;
  }
  return ModelSet(s, bits);
}

std::vector<HornClause> random_clause_set(std::mt19937& rng, const ClauseUniverse& u,
                                          std::size_t max_size) {
  std::vector<HornClause> out;
  const std::size_t count = rng() % (max_size + 1);
  for (std::size_t i = 0; i < count; ++i) out.push_back(u.at(rng() % u.size()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool clause_set_entails_by_tables(const std::vector<HornClause>& premises, const HornClause& goal,
                                  const Signature& sig) {
  std::vector<Formula> fs;
  for (const HornClause& c : premises) fs.push_back(c.to_formula(sig));
  return entails(fs, goal.to_formula(sig), sig);
}

}  // namespace

TEST_CASE("valuations") {
  const Signature s = sig_pqr();
  const Valuation v(s, 0b110);  // p=1 q=1 r=0
  CHECK(v.pattern() == "110");
  CHECK(v.value(0));
  CHECK(v.value(1));
  CHECK_FALSE(v.value(2));
  CHECK(valuation_meet(Valuation(s, 0b110), Valuation(s, 0b011)).pattern() == "010");
  CHECK(valuation_meet(v, v) == v);
  CHECK(valuation_meet(Valuation(s, 0b101), Valuation(s, 0b010)).pattern() == "000");
}

TEST_CASE("models") {
  SUBCASE("single satisfying row") {
    const Signature s = sig_pq();
    const Formula f = parse("p & q", s);
    CHECK(models(f, s) == set_of(s, {"11"}));
  }
  SUBCASE("empty theory") {
    const Signature s = sig_pq();
    CHECK(models(std::span<const Formula>{}, s) == ModelSet::universe(s));
    CHECK(ModelSet::universe(s).patterns() ==
          std::vector<std::string>{"00", "01", "10", "11"});
  }
  SUBCASE("chained implications") {
    const Signature s = sig_pqr();
    const std::vector<Formula> fs = {parse("p -> q", s), parse("q -> r", s)};
    CHECK(models(fs, s) == set_of(s, {"000", "001", "011", "111"}));
  }
  SUBCASE("limit") {
    const Signature big({"a", "b", "c", "d", "e"});
    CHECK_THROWS_AS(models(parse("a", big), big), LimitError);
  }
}

TEST_CASE("entails") {
  const Signature s = sig_pqr();
  const std::vector<Formula> fs = {parse("p -> q", s), parse("q -> r", s)};
  CHECK(entails(fs, parse("p -> r", s), s));
  CHECK_FALSE(entails(std::span<const Formula>{}, parse("p", s), s));
  const std::vector<Formula> boom = {parse("p", s), parse("~p", s)};
  CHECK(entails(boom, parse("q", s), s));
}

TEST_CASE("horn entailment by forward chaining") {
  const Signature s = sig_pqr();
  const auto pq = *HornClause::make(0b001, 1);
  const auto qr = *HornClause::make(0b010, 2);
  const auto pr = *HornClause::make(0b001, 2);
  const auto prq = *HornClause::make(0b101, 1);
  const std::vector<HornClause> chain = {pq, qr};
  CHECK(horn_entails(chain, pr));
  const std::vector<HornClause> rem = {qr, *HornClause::make(0b011, 2), prq};
  CHECK_FALSE(horn_entails(rem, pr));
  // tautological goals are accepted before canonicalization would reject them
  CHECK(horn_entails(std::span<const HornClause>{}, 0b001, 0));
  // inconsistency entails everything
  const std::vector<HornClause> bad = {*HornClause::make(0, 0), *HornClause::make(0b001, -1)};
  CHECK(horn_entails(bad, *HornClause::make(0, 2)));
  CHECK(horn_entails(bad, 0, HornClause::kFalsumHead));
}

TEST_CASE("horn closure") {
  const Signature s = sig_pqr();
  SUBCASE("two-rule chain") {
    const std::vector<HornClause> x = {*HornClause::make(0b001, 1), *HornClause::make(0b010, 2)};
    const auto cl = horn_closure(x, s);
    std::vector<std::string> texts;
    for (const HornClause& c : cl) texts.push_back(c.to_string(s));
    CHECK(texts == std::vector<std::string>{"p -> q", "p -> r", "q -> r", "p & q -> r",
                                            "p & r -> q"});
  }
  SUBCASE("empty set entails only tautologies, which are excluded") {
    const Signature one({"p"});
    CHECK(horn_closure(std::span<const HornClause>{}, one).empty());
  }
  SUBCASE("inconsistent set yields the whole universe") {
    const Signature two = sig_pq();
    const std::vector<HornClause> x = {*HornClause::make(0, HornClause::kFalsumHead)};
    CHECK(horn_closure(x, two).size() == 8);
  }
}

TEST_CASE("horn entailment agrees with truth tables") {
  SUBCASE("exhaustive on two atoms") {
    const Signature s = sig_pq();
    const ClauseUniverse u(s);
    REQUIRE(u.size() == 8);
    for (std::uint32_t mask = 0; mask < (1u << u.size()); ++mask) {
      std::vector<HornClause> premises;
      for (std::size_t i = 0; i < u.size(); ++i)
        if ((mask >> i) & 1u) premises.push_back(u.at(i));
      for (std::size_t i = 0; i < u.size(); ++i)
        CHECK(horn_entails(premises, u.at(i)) ==
              clause_set_entails_by_tables(premises, u.at(i), s));
    }
  }
  SUBCASE("exhaustive on three atoms") {
    // 2^20 premise sets; the truth-table side folds incrementally
    const Signature s = sig_pqr();
    const ClauseUniverse u(s);
    std::vector<ValuationBits> cb;
    for (const HornClause& c : u.clauses()) cb.push_back(clause_models(c, s));
    std::vector<ValuationBits> model_of(std::size_t{1} << u.size());
    model_of[0] = ModelSet::universe(s).bits();
    for (std::uint32_t m = 1; m < (1u << u.size()); ++m)
      model_of[m] = model_of[m & (m - 1)] & cb[static_cast<std::size_t>(std::countr_zero(m))];
    long long disagreements = 0;
    std::vector<HornClause> premises;
    for (std::uint32_t m = 0; m < (1u << u.size()); ++m) {
      premises.clear();
      for (std::size_t i = 0; i < u.size(); ++i)
        if ((m >> i) & 1u) premises.push_back(u.at(i));
      for (std::size_t i = 0; i < u.size(); ++i) {
        const bool tabled = (model_of[m] & ~cb[i]) == 0;
        if (horn_entails(premises, u.at(i)) != tabled) ++disagreements;
      }
    }
    CHECK(disagreements == 0);
  }
  SUBCASE("random on four atoms") {
    const Signature s({"a", "b", "c", "d"});
    const ClauseUniverse u(s);
    std::mt19937 rng(99);
    for (int i = 0; i < 1000; ++i) {
      const auto premises = random_clause_set(rng, u, 8);
      const HornClause goal = u.at(rng() % u.size());
      CHECK(horn_entails(premises, goal) == clause_set_entails_by_tables(premises, goal, s));
    }
  }
}

TEST_CASE("horn closure is Tarskian") {
  const Signature s = sig_pqr();
  const ClauseUniverse u(s);
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    const auto x = random_clause_set(rng, u, 6);
    const auto cx = horn_closure(x, s);
    // inclusion
    for (const HornClause& c : x) CHECK(std::count(cx.begin(), cx.end(), c) == 1);
    // idempotency
    CHECK(horn_closure(cx, s) == cx);
    // monotonicity
    auto x2 = x;
    x2.push_back(u.at(rng() % u.size()));
    std::sort(x2.begin(), x2.end());
    x2.erase(std::unique(x2.begin(), x2.end()), x2.end());
    const auto cx2 = horn_closure(x2, s);
    for (const HornClause& c : cx) CHECK(std::count(cx2.begin(), cx2.end(), c) == 1);
  }
}

TEST_CASE("intersection closure") {
  const Signature s = sig_pqr();
  SUBCASE("single meet step") {
    CHECK(intersection_closure(set_of(s, {"110", "011"})) == set_of(s, {"110", "011", "010"}));
  }
  SUBCASE("already closed") {
    const ModelSet m = set_of(s, {"000", "001", "011", "111"});
    CHECK(intersection_closure(m) == m);
  }
  SUBCASE("adding a countermodel to a closed horn theory") {
    // models of p & q plus 101, closed: exactly the models of p
    const ModelSet start = set_of(s, {"110", "111", "101"});
    CHECK(intersection_closure(start) == models(parse("p", s), s));
  }
  SUBCASE("idempotent, extensive, monotone") {
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
      const ModelSet v(s, static_cast<ValuationBits>(rng() % 256));
      const ModelSet c = intersection_closure(v);
      CHECK(v.subset_of(c));
      CHECK(intersection_closure(c) == c);
      const ModelSet w = v.unite(ModelSet(s, static_cast<ValuationBits>(rng() % 256)));
      CHECK(c.subset_of(intersection_closure(w)));
    }
  }
}

TEST_CASE("meet-closed model sets are exactly the horn-definable ones") {
  const Signature s = sig_pqr();
  const ClauseUniverse u(s);
  for (ValuationBits bits = 0; bits < 256; ++bits) {
    const ModelSet v(s, bits);
    // clauses true on v
    std::vector<HornClause> th;
    for (const HornClause& c : u.clauses())
      if ((bits & ~clause_models(c, s)) == 0) th.push_back(c);
    std::vector<Formula> fs;
    for (const HornClause& c : th) fs.push_back(c.to_formula(s));
    const bool horn_definable = models(fs, s) == v;
    CHECK(horn_definable == (intersection_closure(v) == v));
  }
}

TEST_CASE("theory_of and the galois connection") {
  const Signature s = sig_pq();
  CHECK(theory_of(set_of(s, {"11"})) == theory_of(models(parse("p & q", s), s)));
  CHECK(theory_of(ModelSet::universe(s)).contains(parse("p -> p", s)));
  CHECK_FALSE(theory_of(ModelSet::universe(s)).contains(parse("p", s)));
  CHECK(theory_of(ModelSet(s)).inconsistent());
  CHECK(theory_of(ModelSet(s)).contains(parse("p & ~p", s)));

  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const ModelSet v(s, static_cast<ValuationBits>(rng() % 16));
    CHECK(models(formula_with_models(v), s) == v);
    CHECK(theory_of(v).model_set() == v);
  }
}

TEST_CASE("representatives") {
  const Signature s = sig_pq();
  SUBCASE("one class per superset of the model set") {
    const auto reps = representatives(set_of(s, {"11"}));
    CHECK(reps.size() == 8);  // 2^(4-1)
    // pairwise non-equivalent, all entailed
    std::vector<ValuationBits> seen;
    for (const Formula& f : reps.formulas()) {
      const ModelSet m = models(f, s);
      CHECK(set_of(s, {"11"}).subset_of(m));
      CHECK(std::count(seen.begin(), seen.end(), m.bits()) == 0);
      seen.push_back(m.bits());
    }
  }
  SUBCASE("tautology class only") {
    const auto reps = representatives(ModelSet::universe(s));
    REQUIRE(reps.size() == 1);
    CHECK(reps.formulas()[0].text() == "T");
  }
  SUBCASE("inconsistent theory over one atom") {
    const Signature one({"p"});
    CHECK(representatives(ModelSet(one)).size() == 4);
  }
  SUBCASE("limit") {
    const Signature four({"a", "b", "c", "d"});
    CHECK_THROWS_AS(representatives(ModelSet(four, 1)), LimitError);
    CHECK(representatives(ModelSet(four, 0xFF00)).size() == 256);
  }
}
