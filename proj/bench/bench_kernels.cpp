// Serial reference against the OpenMP path for the heavier kernels.
#include <benchmark/benchmark.h>

#include "orlicz/aniso.hpp"
#include "orlicz/corpus.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/nemytskii.hpp"

using namespace orlicz;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_SublevelVolume(benchmark::State& s) {
    const auto Phi = NDimYoungFunction::orthotropic({power(2.0), power_log(3.0, 1.0), exp_young(1.0)});
    VolumeOptions opt;
    opt.exec = mode(s);
    for (auto _ : s) benchmark::DoNotOptimize(sublevel_volume(Phi, 2.0, opt));
    label(s);
}

void BM_SublevelVolumeMC(benchmark::State& s) {
    const auto Phi = NDimYoungFunction::isotropic(power(2.0), 3);
    for (auto _ : s) benchmark::DoNotOptimize(sublevel_volume_mc(Phi, 1.0, 200000, 7, mode(s)).value);
    label(s);
}

void BM_ModularConvergence(benchmark::State& s) {
    const auto e = *find_corpus("gauss2");
    std::vector<double> ks;
    std::vector<TestFunction> seq;
    for (double k = 2; k <= 256; k *= 2) {
        ks.push_back(k);
        seq.push_back(scaled(e.u, 1.0 + 1.0 / k));
    }
    const std::vector<double> lambdas{0.25, 0.5, 1.0, 2.0};
    for (auto _ : s)
        benchmark::DoNotOptimize(
            modular_convergence(seq, ks, e.u, power(2.0), e.box, lambdas, ModularPart::sobolev, {}, mode(s)));
    label(s);
}

void BM_Counterexample(benchmark::State& s) {
    CounterexampleOptions opt;
    opt.ks = {8, 64, 512, 4096};
    opt.exec = mode(s);
    for (auto _ : s) benchmark::DoNotOptimize(counterexample_run(opt).max_rel_err);
    label(s);
}

void BM_Poincare(benchmark::State& s) {
    const auto corpus = bump_corpus(2);
    PoincareOptions opt;
    opt.exec = mode(s);
    for (auto _ : s) benchmark::DoNotOptimize(poincare_probe(corpus, power(2.0), BoxDomain::unit(2), opt).c_star);
    label(s);
}

}  // namespace

BENCHMARK(BM_SublevelVolume)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SublevelVolumeMC)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ModularConvergence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Counterexample)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Poincare)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
