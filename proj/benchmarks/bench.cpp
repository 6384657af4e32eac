#include <benchmark/benchmark.h>

#include "selfsim/catalog.hpp"
#include "selfsim/limit.hpp"
#include "selfsim/nucleus.hpp"
#include "selfsim/schreier.hpp"
#include "selfsim/spectrum.hpp"

using namespace selfsim;

namespace {

SelfSimilarGroup group(const char* key) {
  const RealizedAutomaton r = to_automaton(catalog_get(key).document);
  return SelfSimilarGroup(r.automaton, r.generators);
}

void BM_BasilicaSchreier(benchmark::State& state) {
  const RealizedAutomaton r = to_automaton(catalog_get("basilica").document);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_schreier(r.automaton, r.generators, n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_BasilicaSchreier)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_Components(benchmark::State& state) {
  const RealizedAutomaton r = to_automaton(catalog_get("aleshin").document);
  const LabeledSchreierGraph g = build_schreier(r.automaton, r.generators, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(connected_components(g));
}
BENCHMARK(BM_Components)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Canonicalize(benchmark::State& state) {
  const SelfSimilarGroup g = group("aut882");
  for (auto _ : state) benchmark::DoNotOptimize(g.canonicalize("(c a^-1 c b^-1)^4"));
}
BENCHMARK(BM_Canonicalize);

void BM_Nucleus(benchmark::State& state) {
  const SelfSimilarGroup g = group(state.range(0) == 0 ? "basilica" : "virtually_z3");
  for (auto _ : state) benchmark::DoNotOptimize(compute_nucleus(g.generators()));
}
BENCHMARK(BM_Nucleus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NucleusBound(benchmark::State& state) {
  const SelfSimilarGroup g = group("lamplighter");
  for (auto _ : state) benchmark::DoNotOptimize(compute_nucleus(g.generators(), NucleusLimits{500, 20}));
}
BENCHMARK(BM_NucleusBound)->Unit(benchmark::kMillisecond);

void BM_EquivalenceClass(benchmark::State& state) {
  const SelfSimilarGroup g = group("basilica");
  const NucleusAutomaton na(compute_nucleus(g.generators()));
  const BoundaryPoint p = BoundaryPoint::parse("01^w 1");
  for (auto _ : state) benchmark::DoNotOptimize(equivalence_class(na, p));
}
BENCHMARK(BM_EquivalenceClass);

void BM_Spectrum(benchmark::State& state) {
  const RealizedAutomaton r = to_automaton(catalog_get("basilica").document);
  const LabeledSchreierGraph g = build_schreier(r.automaton, r.generators, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g));
}
BENCHMARK(BM_Spectrum)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
