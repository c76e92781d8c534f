#include <benchmark/benchmark.h>

#include "hwp/certificate.hpp"
#include "hwp/completion.hpp"
#include "hwp/interval_paths.hpp"
#include "hwp/params.hpp"
#include "hwp/skolem.hpp"
#include "hwp/verifier.hpp"

namespace {

void BM_Assemble(benchmark::State& state) {
    hwp::Params p = hwp::make_params(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(1)));
    for (auto _ : state) {
        hwp::BaseCycleSet base = hwp::assemble(p);
        benchmark::DoNotOptimize(base.longs.size());
    }
}
BENCHMARK(BM_Assemble)->Args({9, 5})->Args({13, 6})->Args({21, 17});

void BM_CheckBase(benchmark::State& state) {
    hwp::Params p = hwp::make_params(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(1)));
    hwp::BaseCycleSet base = hwp::assemble(p);
    for (auto _ : state) {
        hwp::CoverageReport rep = hwp::check_base(base);
        benchmark::DoNotOptimize(rep.ok);
    }
}
BENCHMARK(BM_CheckBase)->Args({9, 5})->Args({21, 17});

void BM_DevelopAndCheck(benchmark::State& state) {
    hwp::Params p = hwp::make_params(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(1)));
    hwp::BaseCycleSet base = hwp::assemble(p);
    for (auto _ : state) {
        hwp::Factorization fact = hwp::develop(base);
        hwp::CoverageReport rep = hwp::check_factorization(fact, p);
        benchmark::DoNotOptimize(rep.ok);
    }
}
BENCHMARK(BM_DevelopAndCheck)->Args({9, 4})->Args({13, 6})->Unit(benchmark::kMillisecond);

void BM_Skolem(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        hwp::SkolemSeq s = hwp::generate_skolem(order);
        benchmark::DoNotOptimize(s.entries.data());
    }
}
BENCHMARK(BM_Skolem)->Arg(20)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_IntervalPath(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    hwp::IntervalPathSpec spec{0, g, g + 1, 2 * g + 1, 2, g / 3};
    for (auto _ : state) {
        hwp::IntervalPath path = hwp::build_interval_path(spec);
        benchmark::DoNotOptimize(path.data());
    }
}
BENCHMARK(BM_IntervalPath)->Arg(50)->Arg(500);

void BM_SerializeRoundTrip(benchmark::State& state) {
    hwp::BaseCycleSet base = hwp::assemble(hwp::make_params(9, 5));
    hwp::Certificate cert = hwp::make_certificate(base, true);
    for (auto _ : state) {
        std::string text = hwp::serialize(cert, hwp::CertFormat::Json);
        hwp::Certificate back = hwp::deserialize(text);
        benchmark::DoNotOptimize(back.params.v);
    }
}
BENCHMARK(BM_SerializeRoundTrip);

}  // namespace

BENCHMARK_MAIN();
