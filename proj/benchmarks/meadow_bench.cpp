#include <benchmark/benchmark.h>

#include "meadow/congruence.hpp"
#include "meadow/modelcheck.hpp"
#include "meadow/numberfield.hpp"
#include "meadow/signexp.hpp"

using namespace meadow;

static void BM_MdExhaustive(benchmark::State& state) {
  const auto m = make_meadow("zsf:" + std::to_string(state.range(0)));
  const Theory md = theories::md();
  for (auto _ : state) {
    auto r = check_theory(*m, md, {CheckMode::exhaustive(), 1, {}});
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * 4 * state.range(0) * state.range(0) * state.range(0));
}
BENCHMARK(BM_MdExhaustive)->Arg(6)->Arg(30)->Arg(42)->Unit(benchmark::kMillisecond);

static void BM_SampledCheckQ0(benchmark::State& state) {
  const RationalMeadow q;
  const Equation e = parse_equation("x * (y + z) = x * y + x * z");
  for (auto _ : state) {
    auto v = check_equation(q, e, {CheckMode::sample(static_cast<std::uint64_t>(state.range(0)), 0), 1, {}});
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_SampledCheckQ0)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_AllCongruences(benchmark::State& state) {
  const auto alg = FiniteAlgebra::from_meadow(*make_meadow("zsf:" + std::to_string(state.range(0))));
  for (auto _ : state) {
    auto l = all_congruences(alg);
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_AllCongruences)->Arg(6)->Arg(30)->Arg(42)->Unit(benchmark::kMillisecond);

static void BM_SingleSpec(benchmark::State& state) {
  for (auto _ : state) {
    auto r = verify_single_spec(2, 3, static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SingleSpec)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_GaussianNormalForm(benchmark::State& state) {
  const Poly g = parse_poly("x^2 + 1");
  SplitMix64 rng(1);
  std::vector<Term> terms;
  for (int k = 0; k < 256; ++k) terms.push_back(random_closed_term(rng, "i"));
  std::size_t k = 0;
  for (auto _ : state) {
    auto nf = ext_normal_form(terms[k++ % terms.size()], g, "i");
    benchmark::DoNotOptimize(nf);
  }
}
BENCHMARK(BM_GaussianNormalForm);

static void BM_SignSuite(benchmark::State& state) {
  const auto m = make_meadow("prod:[q0,q0]");
  const auto grid = default_sign_grid(*m);
  for (auto _ : state) {
    auto r = check_signs(m, grid, 0, 0);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SignSuite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
