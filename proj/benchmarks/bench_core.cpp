#include <benchmark/benchmark.h>

#include "landau/eigenfunctions.hpp"
#include "landau/numerics.hpp"
#include "landau/special_functions.hpp"
#include "landau/verify.hpp"

namespace {

using namespace landau;

void bm_kappa_trig(benchmark::State& state) {
    double r = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(geometry::kappa_cos(-1.0, r));
        benchmark::DoNotOptimize(geometry::kappa_sin(-1.0, r));
        r += 1e-6;
    }
}
BENCHMARK(bm_kappa_trig);

void bm_hypergeometric(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sf::hyp2f1_terminating_regularized(l, l + 5.0, 2.0, 0.37));
}
BENCHMARK(bm_hypergeometric)->Arg(2)->Arg(8);

void bm_eigenfunction_eval(benchmark::State& state) {
    const ModelParams params = ModelParams::make(1.0, 2.0);
    const auto fn = eigen::radial_eigenfunction(
        params, {spectrum::Family::lowest_weight, 2.0, 1.0});
    double r = 0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fn.eval(r));
        r = r < 3.0 ? r + 1e-4 : 0.2;
    }
}
BENCHMARK(bm_eigenfunction_eval);

void bm_surface_norm(benchmark::State& state) {
    const ModelParams params = ModelParams::make(-1.0, 2.0);
    const auto fn = eigen::radial_eigenfunction(
        params, {spectrum::Family::lowest_weight, 1.0, 0.0});
    auto v = [&fn](double r) { return fn.value(r); };
    for (auto _ : state)
        benchmark::DoNotOptimize(
            numerics::integrate_radial(v, v, params, numerics::default_scheme(params)));
}
BENCHMARK(bm_surface_norm);

void bm_verify_gauge(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify::run_suite("gauge"));
}
BENCHMARK(bm_verify_gauge);

}  // namespace
