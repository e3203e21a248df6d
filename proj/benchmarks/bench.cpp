#include <benchmark/benchmark.h>

#include "lgaps/characters.hpp"
#include "lgaps/kappacoeffs.hpp"
#include "lgaps/lfunc.hpp"
#include "lgaps/localconst.hpp"
#include "lgaps/shiftframe.hpp"

using namespace lgaps;

namespace {
const bool prec_init = [] { Real::set_working_bits(128); return true; }();
}

static void BM_HurwitzZeta(benchmark::State& state) {
    PrecisionConfig cfg;
    Cplx s(Real(0.5), Real(static_cast<double>(state.range(0))));
    for (auto _ : state) {
        Cplx v = hurwitz_zeta(s, Real(0.3), cfg);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HurwitzZeta)->Arg(5)->Arg(40)->Arg(100);

static void BM_WValue(benchmark::State& state) {
    PrecisionConfig cfg;
    DirichletCharacter chi = [&] {
        for (const auto& c : enumerate_characters(state.range(0)))
            if (c.is_primitive() && c.is_even() && !c.is_principal()) return c;
        throw std::runtime_error("no character");
    }();
    WEvaluator w(chi, cfg);
    double t = 1.0;
    for (auto _ : state) {
        Real v = w(Real(t));
        benchmark::DoNotOptimize(v);
        t += 0.37;
    }
}
BENCHMARK(BM_WValue)->Arg(5)->Arg(13)->Arg(101);

static void BM_GaussSum(benchmark::State& state) {
    auto chars = enumerate_characters(state.range(0));
    const DirichletCharacter* chi = nullptr;
    for (const auto& c : chars)
        if (c.is_primitive()) { chi = &c; break; }
    for (auto _ : state) {
        auto g = gauss_sum(*chi);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_GaussSum)->Arg(53)->Arg(199);

static void BM_EpsSeriesMultiply(benchmark::State& state) {
    Real::set_working_bits(256);
    EpsSeries a(-16, 12), b(-16, 12);
    for (int k = -16; k <= 12; ++k) {
        a.at(k) = Dual2(Cplx(Real(1.0 / (k + 20.0)), Real(0.5)));
        b.at(k) = Dual2(Cplx(Real(0.25), Real(1.0 / (k + 18.0))));
    }
    for (auto _ : state) {
        EpsSeries p = a * b;
        benchmark::DoNotOptimize(p);
    }
    Real::set_working_bits(128);
}
BENCHMARK(BM_EpsSeriesMultiply);

static void BM_TwentyTermSum(benchmark::State& state) {
    EngineConfig cfg;
    for (auto _ : state) {
        EpsSumResult r = r_sum_eps0(Real(2L), cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_TwentyTermSum)->Unit(benchmark::kMillisecond);

static void BM_MaclEval(benchmark::State& state) {
    Real::set_working_bits(256);
    Real k(state.range(0) / 100.0);
    for (auto _ : state) {
        Real v = macl_eval(c_closed(0), k);
        benchmark::DoNotOptimize(v);
    }
    Real::set_working_bits(128);
}
BENCHMARK(BM_MaclEval)->Arg(25)->Arg(742);  // one per evaluation regime

static void BM_EulerProduct(benchmark::State& state) {
    for (auto _ : state) {
        auto e = a3(state.range(0), 128);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_EulerProduct)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
