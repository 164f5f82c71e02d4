#include <benchmark/benchmark.h>

#include "nilrep/bch.hpp"
#include "nilrep/corpus.hpp"
#include "nilrep/linalg.hpp"
#include "nilrep/regular_action.hpp"
#include "nilrep/representation.hpp"
#include "nilrep/sampling.hpp"

using namespace nilrep;

namespace {

LieAlgebra algebra_by_index(int idx) {
  switch (idx) {
    case 0:
      return make({Family::Heisenberg, 3});
    case 1:
      return make({Family::StrictUpper, 4});
    case 2:
      return make({Family::Filiform, 5});
    default:
      return make({Family::FreeNilpotent23, 0});
  }
}

void BM_BchProduct(benchmark::State& state) {
  const LieAlgebra g = algebra_by_index(static_cast<int>(state.range(0)));
  Sampler sampler(1);
  const LieElement x = sampler.element(g.dim());
  const LieElement y = sampler.element(g.dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(bch_product(g, x, y));
  }
}
BENCHMARK(BM_BchProduct)->DenseRange(0, 3);

void BM_TranslationJet(benchmark::State& state) {
  const LieAlgebra g = algebra_by_index(static_cast<int>(state.range(0)));
  Sampler sampler(2);
  const LieElement x = sampler.element(g.dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(translation_jet(g, x));
  }
}
BENCHMARK(BM_TranslationJet)->DenseRange(0, 3);

void BM_LieDerivative(benchmark::State& state) {
  const LieAlgebra g = algebra_by_index(static_cast<int>(state.range(0)));
  Sampler sampler(3);
  const TranslationJet jet = translation_jet(g, sampler.element(g.dim()));
  const PolyFun phi = sampler.poly_of_degree(g.dim(), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lie_derivative(jet, phi));
  }
}
BENCHMARK(BM_LieDerivative)->DenseRange(0, 3);

void BM_BuildRepresentation(benchmark::State& state) {
  const LieAlgebra g = algebra_by_index(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_representation(g));
  }
}
BENCHMARK(BM_BuildRepresentation)->DenseRange(0, 3);

void BM_NilpotenceIndex(benchmark::State& state) {
  const LieAlgebra g = algebra_by_index(static_cast<int>(state.range(0)));
  const Representation rep = build_representation(g);
  Sampler sampler(4);
  const LieElement x = sampler.nonzero_element(g.dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(nilpotence_index(rep, x));
  }
}
BENCHMARK(BM_NilpotenceIndex)->DenseRange(0, 3);

void BM_Rref(benchmark::State& state) {
  Sampler sampler(5);
  const int n = static_cast<int>(state.range(0));
  RationalMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = sampler.rational();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
