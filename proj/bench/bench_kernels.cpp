#include "qnull/kernels.hpp"

#include "random_data.hpp"

#include <benchmark/benchmark.h>

using namespace qnull;

namespace {

std::vector<CommutingPoint> points(std::size_t count) {
    testing::RandomData rnd(0xbe7c0001);
    std::vector<CommutingPoint> out;
    for (std::size_t n = 0; n < count; ++n) out.push_back(rnd.commuting_point(3));
    return out;
}

std::vector<ProductFormulaSample> samples(std::size_t count) {
    testing::RandomData rnd(0xbe7c0002);
    std::vector<ProductFormulaSample> out;
    for (std::size_t n = 0; n < count; ++n) {
        CommutingPoint p = rnd.commuting_point(3);
        out.push_back({rnd.polynomial(3, 3, 4), rnd.polynomial(3, 3, 4), std::move(p)});
    }
    return out;
}

void BM_EvalSerial(benchmark::State& state) {
    testing::RandomData rnd(0xbe7c0003);
    Polynomial f = rnd.polynomial(3, 4, 10);
    auto pts = points(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eval_batch_serial(f, pts));
}

void BM_EvalParallel(benchmark::State& state) {
    testing::RandomData rnd(0xbe7c0003);
    Polynomial f = rnd.polynomial(3, 4, 10);
    auto pts = points(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eval_batch(f, pts));
}

void BM_ProductFormulaSerial(benchmark::State& state) {
    auto s = samples(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(product_formula_batch_serial(s));
}

void BM_ProductFormulaParallel(benchmark::State& state) {
    auto s = samples(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(product_formula_batch(s));
}

void BM_NormalFormSerial(benchmark::State& state) {
    testing::RandomData rnd(0xbe7c0004);
    std::vector<Polynomial> divisors{rnd.polynomial(2, 2, 3), rnd.polynomial(2, 2, 3)};
    std::vector<Polynomial> inputs;
    for (long n = 0; n < state.range(0); ++n) inputs.push_back(rnd.polynomial(2, 4, 6));
    MonomialOrder order = MonomialOrder::degrevlex(2);
    for (auto _ : state) benchmark::DoNotOptimize(normal_form_batch_serial(inputs, divisors, order));
}

void BM_NormalFormParallel(benchmark::State& state) {
    testing::RandomData rnd(0xbe7c0004);
    std::vector<Polynomial> divisors{rnd.polynomial(2, 2, 3), rnd.polynomial(2, 2, 3)};
    std::vector<Polynomial> inputs;
    for (long n = 0; n < state.range(0); ++n) inputs.push_back(rnd.polynomial(2, 4, 6));
    MonomialOrder order = MonomialOrder::degrevlex(2);
    for (auto _ : state) benchmark::DoNotOptimize(normal_form_batch(inputs, divisors, order));
}

}  // namespace

BENCHMARK(BM_EvalSerial)->Arg(256)->Arg(4096);
BENCHMARK(BM_EvalParallel)->Arg(256)->Arg(4096);
BENCHMARK(BM_ProductFormulaSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_ProductFormulaParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_NormalFormSerial)->Arg(64)->Arg(512);
BENCHMARK(BM_NormalFormParallel)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
