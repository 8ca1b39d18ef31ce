#include <benchmark/benchmark.h>

#include <random>

#include "liepoisson/casimir.hpp"
#include "liepoisson/catalog.hpp"
#include "liepoisson/linalg.hpp"
#include "liepoisson/poisson.hpp"
#include "liepoisson/spectral.hpp"

namespace {

using namespace liepoisson;

RatMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Rational(static_cast<long long>(engine() % 41) - 20,
                         static_cast<long long>(engine() % 6) + 1);
  return m;
}

void BM_BareissRank(benchmark::State& state) {
  RatMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_BareissRank)->Arg(6)->Arg(10)->Arg(14);

void BM_KernelBasis(benchmark::State& state) {
  RatMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 43);
  // make the kernel nontrivial: duplicate a couple of columns
  for (std::size_t i = 0; i < m.rows(); ++i) {
    m(i, 1) = m(i, 0);
    if (m.cols() > 3) m(i, 3) = m(i, 2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(8)->Arg(12);

void BM_CharacteristicPolynomial(benchmark::State& state) {
  RatMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 44);
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_polynomial(m));
}
BENCHMARK(BM_CharacteristicPolynomial)->Arg(6)->Arg(10);

void BM_GenericRankDim10(benchmark::State& state) {
  auto [g, params] = exF_paper_instance(ThetaTag::rational(Rational(1, 2)), Rational(1));
  PolyMatrix pi = poisson_matrix(g);
  for (auto _ : state) benchmark::DoNotOptimize(poly_matrix_rank_generic(pi, 0));
}
BENCHMARK(BM_GenericRankDim10);

void BM_CasimirBasisHeisenberg(benchmark::State& state) {
  LieAlgebra g = heisenberg(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_casimirs(g, 4));
}
BENCHMARK(BM_CasimirBasisHeisenberg)->Arg(2)->Arg(4);

void BM_CasimirVerdictDim10Degree4(benchmark::State& state) {
  auto [g, params] = exF_paper_instance(ThetaTag::rational(Rational(1, 2)), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(casimirs_constant_verdict(g, 4, 0));
}
BENCHMARK(BM_CasimirVerdictDim10Degree4);

}  // namespace

BENCHMARK_MAIN();
