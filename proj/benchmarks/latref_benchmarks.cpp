#include "latref/edge_bounds.hpp"
#include "latref/local.hpp"
#include "latref/pipeline.hpp"
#include "latref/shortvec.hpp"
#include "latref/snf.hpp"
#include "latref/vinberg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace latref;

namespace {

IMat random_symmetric(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-4, 4);
    IMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = d(rng);
    return a;
}

QuadLattice l3() {
    IMat g(4, 4);
    g(0, 0) = -3; g(1, 1) = 5; g(2, 2) = 1; g(3, 3) = 1;
    return QuadLattice(g);
}

void BM_smith_normal_form(benchmark::State& state) {
    IMat a = random_symmetric((std::size_t)state.range(0), 7);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(6);

void BM_hilbert_symbol(benchmark::State& state) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-500, 500);
    for (auto _ : state) {
        int a = d(rng), b = d(rng);
        if (!a || !b) continue;
        benchmark::DoNotOptimize(hilbert_symbol(Rat(a), Rat(b), Place::prime(Int(2))));
        benchmark::DoNotOptimize(hilbert_symbol(Rat(a), Rat(b), Place::prime(Int(7))));
    }
}
BENCHMARK(BM_hilbert_symbol);

void BM_bounds_table(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(bounds_table());
}
BENCHMARK(BM_bounds_table);

void BM_enumerate_shifted(benchmark::State& state) {
    // positive definite quarter-integral form with a shifted coset, the shape
    // the Vinberg cell enumeration produces
    QMat g(3, 3);
    g(0, 0) = Rat(5, 2); g(1, 1) = Rat(3); g(2, 2) = Rat(7, 2);
    g(0, 1) = g(1, 0) = Rat(-1, 2);
    g(1, 2) = g(2, 1) = Rat(1, 2);
    QVec center{Rat(1, 2), Rat(0), Rat(1, 2)};
    Rat value((long)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_shifted(g, center, value));
}
BENCHMARK(BM_enumerate_shifted)->Arg(50)->Arg(500);

void BM_vinberg_roots(benchmark::State& state) {
    QuadLattice l = l3();
    for (auto _ : state) {
        // priority cap 1000 comfortably covers the accepted roots (max 180)
        // without paying for the post-run budget exhaustion scan
        VinbergEngine e(l, NormPolicy::all(), {(std::size_t)state.range(0), Rat(1000)});
        while (e.next_root()) {
        }
        benchmark::DoNotOptimize(e.accepted());
    }
}
BENCHMARK(BM_vinberg_roots)->Arg(4)->Arg(7);

void BM_enumerate_configurations(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_configurations());
}
BENCHMARK(BM_enumerate_configurations);

}  // namespace

BENCHMARK_MAIN();
