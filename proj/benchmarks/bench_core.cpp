#include <benchmark/benchmark.h>

#include "pluecker/membership.hpp"
#include "pluecker/pfaffian.hpp"

using namespace plk;

namespace {

const Field q;

SkewMatrix random_skew(std::size_t n, SplitMix64& rng) {
    std::vector<Scalar> upper;
    for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) upper.push_back(q.sample(rng, 99));
    return SkewMatrix::from_upper(n, q, upper);
}

void BM_pfaffian(benchmark::State& state) {
    SplitMix64 rng(1);
    SkewMatrix a = random_skew(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        Scalar v = pfaffian(a);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_pfaffian)->Arg(6)->Arg(10)->Arg(14);

void BM_wedge(benchmark::State& state) {
    SplitMix64 rng(2);
    int d = static_cast<int>(state.range(0));
    AltTensor a = secant_sample(2, 2, d, rng.next());
    AltTensor b = secant_sample(2, 2, d, rng.next());
    for (auto _ : state) {
        AltTensor w = wedge(a, b);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_wedge)->Arg(6)->Arg(10);

void BM_pf_poly(benchmark::State& state) {
    for (auto _ : state) {
        MayaPoly p = pf_poly(static_cast<int>(state.range(0)), q);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_pf_poly)->Arg(3)->Arg(4)->Arg(5);

void BM_membership_trial(benchmark::State& state) {
    SplitMix64 rng(3);
    int d = static_cast<int>(state.range(0));
    AltTensor w = secant_sample(2, 3, d, rng.next());
    VarietySpec gr = VarietySpec::grassmannian(q);
    std::uint64_t seed = 17;
    for (auto _ : state) {
        MembershipVerdict v = randomized_membership(w, gr, 1, seed++);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_membership_trial)->Arg(8)->Arg(10)->Arg(12);

} // namespace

BENCHMARK_MAIN();
