#include <benchmark/benchmark.h>

#include "hesspoly/forms.hpp"
#include "hesspoly/groups.hpp"
#include "hesspoly/identities.hpp"
#include "hesspoly/lines27.hpp"
#include "hesspoly/qseries.hpp"

using namespace hesspoly;

namespace {

void BM_mpoly_mul(benchmark::State& state) {
    const MPoly& C6 = forms::build("C6");
    const MPoly& C12 = forms::build("C12");
    for (auto _ : state) benchmark::DoNotOptimize(C6 * C12);
}
BENCHMARK(BM_mpoly_mul);

void BM_cyclo_mul(benchmark::State& state) {
    Cyclo a = Cyclo::zeta(12) + Cyclo(2) * Cyclo::zeta(12).pow(3) + Cyclo(rat(1, 3));
    Cyclo b = a.conjugate() + Cyclo(1);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_cyclo_mul);

void BM_theorem15_third_equation(benchmark::State& state) {
    const auto* e = identities::find("W-9");
    RunConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(identities::verify_expand(*e, cfg));
}
BENCHMARK(BM_theorem15_third_equation)->Unit(benchmark::kMillisecond);

void BM_closure_g4(benchmark::State& state) {
    const auto& gs = groups::gen_set("g4");
    for (auto _ : state)
        benchmark::DoNotOptimize(groups::closure(gs, groups::ClosureMode::Matrix));
}
BENCHMARK(BM_closure_g4)->Unit(benchmark::kMillisecond);

void BM_aut_order(benchmark::State& state) {
    const auto& m = lines27::Model::instance();
    for (auto _ : state) benchmark::DoNotOptimize(m.aut_order());
}
BENCHMARK(BM_aut_order)->Unit(benchmark::kMillisecond);

void BM_theta_series(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qseries::theta_A2(0, n));
}
BENCHMARK(BM_theta_series)->Arg(20)->Arg(100);

void BM_picard_fuchs(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qseries::picard_fuchs_residual(12));
}
BENCHMARK(BM_picard_fuchs)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
