#include <benchmark/benchmark.h>

#include <string>

#include "symphmc/symphmc.hpp"

namespace {

const char* const kNames[] = {"leapfrog", "blcasa", "proc-3.0"};

// One integration leg of 100 steps on the Gaussian benchmark target.
void BM_IntegrateLeg(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto integ = symphmc::named_integrator(kNames[state.range(1)]);
  auto target = symphmc::gaussian_model(d);
  auto rng = symphmc::make_stream(1, symphmc::StreamPurpose::Test, 0);
  auto s0 = symphmc::PhaseState::zeros(d);
  target->exact_sample(rng, s0.q());
  target->draw_momentum(rng, s0.p());
  const double h = 0.5 * symphmc::named_stability_length(kNames[state.range(1)]) / static_cast<double>(d);
  for (auto _ : state) {
    auto r = symphmc::integrate_leg(s0, h, 100, integ, *target);
    benchmark::DoNotOptimize(r.state.q().data());
  }
  state.SetLabel(kNames[state.range(1)]);
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_IntegrateLeg)->ArgsProduct({{256, 1024, 4096}, {0, 1, 2}});

void BM_IntegrateLegGeneric(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto integ = symphmc::named_integrator("proc-3.0");
  auto target = symphmc::anharmonic_model(d);
  auto s0 = symphmc::PhaseState::zeros(d);
  for (std::size_t i = 0; i < d; ++i) s0.p()[i] = 0.5;
  for (auto _ : state) {
    auto r = symphmc::integrate_leg(s0, 0.01, 100, integ, *target);
    benchmark::DoNotOptimize(r.state.q().data());
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_IntegrateLegGeneric)->Arg(256)->Arg(4096);

void BM_RowlandsLeg(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto scheme = symphmc::RowlandsScheme::standard();
  auto target = symphmc::anharmonic_model(d);
  auto s0 = symphmc::PhaseState::zeros(d);
  for (std::size_t i = 0; i < d; ++i) s0.p()[i] = 0.5;
  for (auto _ : state) {
    auto r = symphmc::rowlands_leg(s0, 0.01, 100, scheme, *target);
    benchmark::DoNotOptimize(r.state.q().data());
  }
}
BENCHMARK(BM_RowlandsLeg)->Arg(256);

void BM_RhoNorm(benchmark::State& state) {
  const auto integ = symphmc::named_integrator("proc-3.0");
  for (auto _ : state) benchmark::DoNotOptimize(symphmc::rho_norm(integ, 3.0));
}
BENCHMARK(BM_RhoNorm)->Unit(benchmark::kMillisecond);

void BM_StabilityLength(benchmark::State& state) {
  const auto kernel = symphmc::build_kernel(0.348674);
  for (auto _ : state) benchmark::DoNotOptimize(symphmc::stability_length(kernel));
}
BENCHMARK(BM_StabilityLength)->Unit(benchmark::kMillisecond);

void BM_Tune(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(symphmc::tune(3.0, {0.35, 0.0, 0.0}).rho_norm);
}
BENCHMARK(BM_Tune)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
