#include "soergel/braid.hpp"
#include "soergel/hochschild.hpp"
#include "soergel/homology.hpp"

#include <benchmark/benchmark.h>

using namespace soergel;

namespace {

const char* const kWords[] = {"1 1 1", "1 -2 1 -2", "1 2 1 2 1"};
const std::size_t kStrands[] = {2, 3, 3};

void BM_hh_link_homology(benchmark::State& state, Schedule schedule)
{
    const auto w = parse_braid(kWords[state.range(0)], kStrands[state.range(0)]);
    const int degree = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(hh_link_homology(w, CoeffRing::integers(), degree, schedule));
    state.SetLabel(w.str());
}

// The per-degree Smith normal form stage on a fixed free complex.
void BM_graded_homology(benchmark::State& state, Schedule schedule)
{
    const auto w = parse_braid(kWords[state.range(0)], kStrands[state.range(0)]);
    const auto c = hochschild_bicomplex(rouquier_complex_of_word(w.letters, w.strands, CoeffRing::integers()));
    const int degree = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(graded_homology(c.complex, CoeffRing::integers(), degree, Page::E2, schedule));
    state.SetLabel(w.str());
}

void args(benchmark::internal::Benchmark* b)
{
    for (int word = 0; word < 3; ++word)
        for (int degree : {8, 16})
            b->Args({word, degree});
    b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK_CAPTURE(BM_hh_link_homology, serial, Schedule::Serial)->Apply(args);
BENCHMARK_CAPTURE(BM_hh_link_homology, parallel, Schedule::Parallel)->Apply(args);
BENCHMARK_CAPTURE(BM_graded_homology, serial, Schedule::Serial)->Apply(args);
BENCHMARK_CAPTURE(BM_graded_homology, parallel, Schedule::Parallel)->Apply(args);

BENCHMARK_MAIN();
