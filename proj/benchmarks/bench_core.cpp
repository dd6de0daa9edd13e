#include "dvr/boundary.hpp"
#include "dvr/dieudonne.hpp"
#include "dvr/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BlaschkeJet(benchmark::State& state)
{
    auto rng = dvr::sample_rng(1, 0);
    dvr::BlaschkeSpec b;
    b.phase = 0.3;
    for (int k = 0; k < state.range(0); ++k) b.zeros.push_back(dvr::sample_disk(rng, 0.9));
    const dvr::Complex z0{0.2, 0.3};
    for (auto _ : state) benchmark::DoNotOptimize(dvr::blaschke_jet(b, z0));
}
BENCHMARK(BM_BlaschkeJet)->Arg(1)->Arg(3)->Arg(6);

void BM_DiskOrder3(benchmark::State& state)
{
    const dvr::Complex z0{0.3, 0.4}, w0{0.1, -0.2};
    const dvr::InterpolationData data{z0, w0, dvr::w1_from_lambda(z0, w0, {0.2, 0.1}),
                                      dvr::w2_from_lambda_mu(z0, w0, {0.2, 0.1}, {-0.3, 0.5})};
    for (auto _ : state) benchmark::DoNotOptimize(dvr::disk_order3(data));
}
BENCHMARK(BM_DiskOrder3);

void BM_SampleBoundary(benchmark::State& state)
{
    const auto spec = dvr::region_spec(0.9, 0.5, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(dvr::sample_boundary(spec, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SampleBoundary)->Arg(360)->Arg(2880);

void BM_MembershipAudit(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(dvr::membership_audit(1000, 6, 1));
}
BENCHMARK(BM_MembershipAudit)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
