// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "evoaut/autgroup.hpp"
#include "evoaut/limits.hpp"

using namespace evoaut;

namespace {

EvolutionAlgebra sample_algebra(std::uint64_t p) {
  const FieldSpec f = FieldSpec::prime(p);
  const auto c = [&](std::int64_t v) { return f.from_int(v); };
  return EvolutionAlgebra::from_squares(f, {{c(1), c(0), c(0)}, {c(0), c(0), c(1)}, {c(0), c(1), c(0)}});
}

MonomialSystem sample_system(std::uint64_t p, std::size_t n) {
  return diag_system(diomucho_algebra(FieldSpec::prime(p), n));
}

void BM_SolutionsParallel(benchmark::State& state) {
  const MonomialSystem s = sample_system(17, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_solutions_bruteforce(s));
}

void BM_SolutionsSerial(benchmark::State& state) {
  const MonomialSystem s = sample_system(17, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_solutions_bruteforce(s));
}

void BM_BruteAutParallel(benchmark::State& state) {
  const EvolutionAlgebra a = sample_algebra(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bruteforce_aut(a));
}

void BM_BruteAutSerial(benchmark::State& state) {
  const EvolutionAlgebra a = sample_algebra(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::bruteforce_aut(a));
}

void BM_NaturalBasesParallel(benchmark::State& state) {
  const EvolutionAlgebra a = sample_algebra(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_natural_bases(a));
}

void BM_NaturalBasesSerial(benchmark::State& state) {
  const EvolutionAlgebra a = sample_algebra(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_natural_bases(a));
}

void BM_AssembleParallel(benchmark::State& state) {
  const FieldSpec q = FieldSpec::rationals();
  const EvolutionAlgebra a = EvolutionAlgebra::from_squares(q, std::vector<Vector>(6, Vector(6, q.zero())));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_aut(a));
}

void BM_AssembleSerial(benchmark::State& state) {
  const FieldSpec q = FieldSpec::rationals();
  const EvolutionAlgebra a = EvolutionAlgebra::from_squares(q, std::vector<Vector>(6, Vector(6, q.zero())));
  for (auto _ : state) benchmark::DoNotOptimize(reference::assemble_aut(a));
}

}  // namespace

BENCHMARK(BM_SolutionsParallel)->Arg(4)->Arg(5);
BENCHMARK(BM_SolutionsSerial)->Arg(4)->Arg(5);
BENCHMARK(BM_BruteAutParallel)->Arg(3)->Arg(5);
BENCHMARK(BM_BruteAutSerial)->Arg(3)->Arg(5);
BENCHMARK(BM_NaturalBasesParallel)->Arg(5)->Arg(7);
BENCHMARK(BM_NaturalBasesSerial)->Arg(5)->Arg(7);
BENCHMARK(BM_AssembleParallel);
BENCHMARK(BM_AssembleSerial);

BENCHMARK_MAIN();
