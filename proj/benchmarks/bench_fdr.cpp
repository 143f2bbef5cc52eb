#include <benchmark/benchmark.h>

#include "fdr/complexes.hpp"
#include "fdr/text.hpp"

using namespace fdr;

namespace {

FormalForm dense_form(const Chart &c, int r)
{
   FormalForm w(c, r);
   for (const auto &bi : enumerate_bi(c.n, c.k, r))
      for (const auto &e : exponents_up_to(c.dim(), 2))
         w.add(bi, Poly::monomial(c.dim(), e, Rat(static_cast<long>(e.size()) + 1) / 3));
   return w;
}

} // namespace

static void BM_Differential(benchmark::State &state)
{
   Chart c{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 4};
   FormalForm w = dense_form(c, 1);
   for (auto _ : state)
      benchmark::DoNotOptimize(d(w));
}
BENCHMARK(BM_Differential)->Args({1, 1})->Args({2, 2})->Args({3, 3});

static void BM_Wedge(benchmark::State &state)
{
   Chart c{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 4};
   FormalForm a = dense_form(c, 1), b = dense_form(c, 1);
   for (auto _ : state)
      benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_Wedge)->Args({1, 1})->Args({2, 2});

static void BM_FormsHomotopy(benchmark::State &state)
{
   Chart c{2, 2, 4};
   auto ct = contract_forms(c);
   FormalForm w = dense_form(c, static_cast<int>(state.range(0)));
   for (auto _ : state)
      benchmark::DoNotOptimize(ct.h(w));
}
BENCHMARK(BM_FormsHomotopy)->DenseRange(1, 4);

static void BM_DensityHomotopy(benchmark::State &state)
{
   Chart c{1, 1, 3};
   auto ct = contract_density(1, 1, {}, 3);
   DensityCurrent e = parse_density("-3/2*pw1[(0,1,2);x;-x + 2]*(ys1^2) dxs1 + pw-unit dys1", c);
   for (auto _ : state)
      benchmark::DoNotOptimize(ct.h(e));
}
BENCHMARK(BM_DensityHomotopy);

static void BM_Betti(benchmark::State &state)
{
   int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
   FiniteComplex c = assemble(n, k, 4, 4, ComplexKind::Forms, true);
   for (auto _ : state)
      benchmark::DoNotOptimize(betti(c));
}
BENCHMARK(BM_Betti)->Args({1, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

static void BM_Certify(benchmark::State &state)
{
   int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
   FiniteComplex c = assemble(n, k, 4, 4, ComplexKind::Forms, true);
   auto h = homotopy_matrices(contract_forms(Chart{n, k, 4}), 4, true);
   for (auto _ : state)
      benchmark::DoNotOptimize(certify_strong_exactness(c, h));
}
BENCHMARK(BM_Certify)->Args({1, 1})->Args({2, 1})->Unit(benchmark::kMillisecond);

static void BM_ParsePrint(benchmark::State &state)
{
   Chart c{2, 2, 4};
   std::string src = to_string(dense_form(c, 2));
   for (auto _ : state)
      benchmark::DoNotOptimize(to_string(parse_form(src, c)));
}
BENCHMARK(BM_ParsePrint);

BENCHMARK_MAIN();
