#include "torhyp/classify.hpp"
#include "torhyp/toric_ideal.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace torhyp;

namespace {

FamilySpec spec(CaseId id, std::vector<long> values) {
  FamilySpec s;
  s.id = id;
  const auto& names = parameter_names(id);
  for (std::size_t i = 0; i < names.size(); ++i) s.params[names[i]] = values.at(i);
  return s;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> dist(-20, 20);
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(gen);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(6)->Arg(10);

void BM_LatticePoints(benchmark::State& state) {
  const Variety v(spec(CaseId::C301, {1, 1, 1}));
  const long k = state.range(0);
  const HPolytope p = polytope_of(v.divisor(IntVec{k, k, k}));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(p));
}
BENCHMARK(BM_LatticePoints)->Arg(2)->Arg(4)->Arg(8);

void BM_TripleIntersection(benchmark::State& state) {
  const Variety v(spec(CaseId::C201, {2}));
  const TDivisor d = v.divisor(IntVec{3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(v.form().triple(d, d, d));
}
BENCHMARK(BM_TripleIntersection);

void BM_MarkovVerify(benchmark::State& state) {
  const Variety v(spec(CaseId::C201, {2}));
  const IntMat b = gale_matrix(v.fan(), v.basis()).B;
  const auto moves = section_moves(v.divisor(IntVec{1, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(markov_verify(b, moves, state.range(0)));
}
BENCHMARK(BM_MarkovVerify)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DeriveVerdict(benchmark::State& state) {
  const Variety v(spec(CaseId::C301, {1, 1, 1}));
  const IntVec c{5, 5, 5};
  for (auto _ : state) benchmark::DoNotOptimize(derive_verdict(v, c));
}
BENCHMARK(BM_DeriveVerdict)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
