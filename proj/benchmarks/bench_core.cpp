#include <benchmark/benchmark.h>

#include "hhverify/campaign.hpp"
#include "hhverify/eig.hpp"
#include "hhverify/generators.hpp"
#include "hhverify/operator_chains.hpp"
#include "hhverify/quadrature.hpp"

namespace {

void BM_EigHermitian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = hhv::CounterRng::substream(99, "bench_eig", 0);
  const auto h = hhv::gen_hermitian(rng, n);
  for (auto _ : state) {
    auto d = hhv::eig_hermitian(h);
    benchmark::DoNotOptimize(d.lambda.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_EigHermitian)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_WeightedGeometricIntegral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = hhv::CounterRng::substream(99, "bench_quad", 0);
  const auto p = hhv::gen_commuting_pair(rng, n, 0.1, 10.0);
  const hhv::QuadratureSpec q;
  for (auto _ : state) {
    auto m = hhv::integrate_curve(
        [&](double t) { return hhv::weighted_geometric(p, t); }, q);
    benchmark::DoNotOptimize(m.mat().data().data());
  }
}
BENCHMARK(BM_WeightedGeometricIntegral)->Arg(2)->Arg(4)->Arg(8);

void BM_ExpSpecialChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = hhv::CounterRng::substream(99, "bench_chain", 0);
  const auto p = hhv::gen_commuting_pair(rng, n, 0.1, 10.0);
  const hhv::QuadratureSpec q;
  for (auto _ : state) {
    auto r = hhv::exp_special_chain(p, q);
    benchmark::DoNotOptimize(r.overall.margin);
  }
}
BENCHMARK(BM_ExpSpecialChain)->Arg(2)->Arg(4)->Arg(8);

void BM_CampaignTrial(benchmark::State& state) {
  const auto cfg = hhv::normalize_config({});
  const auto& def = hhv::find_check("operator_hh_log_chain");
  std::uint64_t trial = 0;
  for (auto _ : state) {
    auto rng = hhv::CounterRng::substream(7, def.id, trial++);
    const auto bag = def.generate(rng, cfg, 4);
    auto out = def.evaluate(bag, cfg);
    benchmark::DoNotOptimize(out.verdict.margin);
  }
}
BENCHMARK(BM_CampaignTrial);

}  // namespace

BENCHMARK_MAIN();
