#include <benchmark/benchmark.h>

#include <random>

#include "beliefchange/base_change.hpp"
#include "beliefchange/horn_change.hpp"

namespace {

using namespace bc;

Signature sig3() { return Signature({"p", "q", "r"}); }

Formula random_formula(std::mt19937& rng, const Signature& sig, int depth) {
  if (depth <= 0 || rng() % 10 < 4)
    return Formula::atom(sig, static_cast<int>(rng() % sig.size()));
  switch (rng() % 4) {
    case 0: return Formula::negation(random_formula(rng, sig, depth - 1));
    case 1:
      return Formula::conjunction(random_formula(rng, sig, depth - 1),
                                  random_formula(rng, sig, depth - 1));
    case 2:
      return Formula::disjunction(random_formula(rng, sig, depth - 1),
                                  random_formula(rng, sig, depth - 1));
    default:
      return Formula::implication(random_formula(rng, sig, depth - 1),
                                  random_formula(rng, sig, depth - 1));
  }
}

BeliefBase random_base(std::size_t size, unsigned seed) {
  const Signature s = sig3();
  std::mt19937 rng(seed);
  std::vector<Formula> elems;
  for (int guard = 0; elems.size() < size && guard < 400; ++guard) {
    BeliefBase probe(s, elems);
    const Formula f = random_formula(rng, s, 4);
    if (!probe.find(f)) elems.push_back(f);
  }
  return BeliefBase(s, elems);
}

void BM_RemaindersExhaustive(benchmark::State& state) {
  const BeliefBase b = random_base(static_cast<std::size_t>(state.range(0)), 7);
  const Formula f = parse("p -> r", b.signature());
  for (auto _ : state)
    benchmark::DoNotOptimize(base_remainders(b, f, EnumerationEngine::Exhaustive));
}
BENCHMARK(BM_RemaindersExhaustive)->Arg(8)->Arg(12)->Arg(16);

void BM_RemaindersDuality(benchmark::State& state) {
  const BeliefBase b = random_base(static_cast<std::size_t>(state.range(0)), 7);
  const Formula f = parse("p -> r", b.signature());
  for (auto _ : state)
    benchmark::DoNotOptimize(base_remainders(b, f, EnumerationEngine::Duality));
}
BENCHMARK(BM_RemaindersDuality)->Arg(8)->Arg(12)->Arg(16);

void BM_HornClosure(benchmark::State& state) {
  const int atoms = static_cast<int>(state.range(0));
  std::vector<std::string> names;
  for (int i = 0; i < atoms; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  const Signature s(names);
  std::vector<HornClause> gens;
  for (int i = 0; i + 1 < atoms; ++i)
    gens.push_back(*HornClause::make(1u << i, i + 1));
  for (auto _ : state) benchmark::DoNotOptimize(horn_closure(gens, s));
}
BENCHMARK(BM_HornClosure)->Arg(3)->Arg(4);

void BM_InfraEnumeration(benchmark::State& state) {
  const Signature s = sig3();
  const std::vector<Formula> gens = {parse("p & q", s)};
  const HornBeliefSet h = HornBeliefSet::from_formulas(s, gens);
  const Formula f = parse("p & q", s);
  for (auto _ : state) {
    const HornInfraView view = infra_e_remainders(h, f);
    benchmark::DoNotOptimize(view.enumerate());
  }
}
BENCHMARK(BM_InfraEnumeration);

void BM_MinimalIncisions(benchmark::State& state) {
  const BeliefBase b = random_base(static_cast<std::size_t>(state.range(0)), 21);
  const Formula f = parse("p -> r", b.signature());
  const SubsetFamily kernels = base_kernels(b, f);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_incisions(kernels));
}
BENCHMARK(BM_MinimalIncisions)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
