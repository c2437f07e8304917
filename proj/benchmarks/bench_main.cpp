#include <benchmark/benchmark.h>

#include <random>

#include "metabelian/invariants.hpp"
#include "metabelian/lie_expr.hpp"
#include "metabelian/parse.hpp"

namespace {

using namespace metabelian;

// Left-normed commutator of `leaves` generators, cycling through x_n..x_1.
LieExpr chain(std::size_t n, std::size_t leaves) {
  std::vector<LieExpr> ops;
  for (std::size_t k = 0; k < leaves; ++k) ops.push_back(LieExpr::generator(n - k % n));
  return LieExpr::left_normed(ops);
}

void BM_NormalForm(benchmark::State& state) {
  const auto leaves = static_cast<std::size_t>(state.range(0));
  const LieExpr e = chain(4, leaves);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(e, 4));
}
BENCHMARK(BM_NormalForm)->DenseRange(4, 12, 4);

void BM_Preimage(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WreathElement h = generator_h(n, n - 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(preimage(h));
}
BENCHMARK(BM_Preimage)->DenseRange(3, 6);

void BM_DecomposeInvariant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(7);
  LieElement f(n);
  const auto basis = commutator_basis(n, d);
  for (int t = 0; t < 4; ++t) f.add_basis(basis[rng() % basis.size()], static_cast<long>(rng() % 7) - 3);
  f = reynolds_lie(f);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_invariant(f));
}
BENCHMARK(BM_DecomposeInvariant)->Args({3, 5})->Args({4, 6})->Args({4, 8})->Args({5, 7});

void BM_DecomposeInElementary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<unsigned>(state.range(1));
  Monomial m(n);
  m[0] = d;
  const Polynomial p = reynolds_poly(Polynomial::term(m, 1));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_in_elementary(p));
}
BENCHMARK(BM_DecomposeInElementary)->Args({3, 8})->Args({4, 10})->Args({5, 12});

void BM_InvariantBasis(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_space_basis(3, d));
}
BENCHMARK(BM_InvariantBasis)->DenseRange(3, 7, 2);

}  // namespace

BENCHMARK_MAIN();
