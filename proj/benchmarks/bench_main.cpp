#include <benchmark/benchmark.h>

#include "periodlab/gamma.hpp"
#include "periodlab/hyp2f1.hpp"
#include "periodlab/hyperlog.hpp"
#include "periodlab/lauricella.hpp"
#include "periodlab/ncalg.hpp"

using namespace periodlab;
using hyperlog::cplx;

static void BM_shuffle_weight3(benchmark::State& state) {
    ncalg::Word u{0, 1, 0}, v{1, 0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(ncalg::shuffle(u, v));
}
BENCHMARK(BM_shuffle_weight3);

static void BM_concat_mul_weight4(benchmark::State& state) {
    using RS = ncalg::NCSeries<Rational>;
    RS a = ncalg::nc_exp(RS::letter(3, 4, 0) + RS::letter(3, 4, 1));
    RS b = ncalg::nc_exp(RS::letter(3, 4, 2) - RS::letter(3, 4, 0));
    for (auto _ : state) benchmark::DoNotOptimize(ncalg::concat_mul(a, b));
}
BENCHMARK(BM_concat_mul_weight4);

static void BM_associator_n2_w3(benchmark::State& state) {
    auto cfg = hyperlog::Configuration::real_points({1.0, 3.0});
    for (auto _ : state) benchmark::DoNotOptimize(hyperlog::associator(cfg, 2, 3));
}
BENCHMARK(BM_associator_n2_w3)->Unit(benchmark::kMillisecond);

static void BM_beta_entry(benchmark::State& state) {
    auto cfg = hyperlog::Configuration::real_points({1.0});
    std::vector<cplx> s = {cplx(0.3), cplx(0.4)};
    for (auto _ : state) benchmark::DoNotOptimize(lauricella::entry(cfg, s, 1, 1));
}
BENCHMARK(BM_beta_entry)->Unit(benchmark::kMillisecond);

static void BM_sv_beta_entry(benchmark::State& state) {
    auto cfg = hyperlog::Configuration::real_points({1.0});
    for (auto _ : state) benchmark::DoNotOptimize(lauricella::sv_entry(cfg, {0.2, 0.2}, 1, 1));
}
BENCHMARK(BM_sv_beta_entry)->Unit(benchmark::kMillisecond);

static void BM_twisted_relation(benchmark::State& state) {
    hyp2f1::HypParams p{cplx(0.21), cplx(0.37), cplx(0.84), cplx(0.35)};
    for (auto _ : state) benchmark::DoNotOptimize(hyp2f1::twisted_relation_residual(p));
}
BENCHMARK(BM_twisted_relation)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
