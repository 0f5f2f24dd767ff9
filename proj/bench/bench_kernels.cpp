#include <benchmark/benchmark.h>

#include "orientgen/chordal_ao.hpp"
#include "orientgen/corpus.hpp"
#include "orientgen/oracle.hpp"
#include "orientgen/quotient.hpp"

using namespace orientgen;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

Graph bench_graph() {
    std::mt19937_64 rng(17);
    return corpus::random_chordal_graph(rng, 12, 0.5);
}

void BM_enumerate(benchmark::State& s) {
    auto g = bench_graph();
    for (auto _ : s) benchmark::DoNotOptimize(oracle::enumerate_ao_graph(g, kDefaultCap, exec_of(s)));
}

void BM_flip_graph(benchmark::State& s) {
    auto g = corpus::complete_graph(7);
    auto os = oracle::enumerate_ao_graph(g);
    for (auto _ : s) benchmark::DoNotOptimize(oracle::graph_flip_graph(g, os, exec_of(s)));
}

void BM_flip_distances(benchmark::State& s) {
    auto g = corpus::cycle_graph(8);
    auto os = oracle::enumerate_ao_graph(g);
    auto fg = oracle::graph_flip_graph(g, os);
    for (auto _ : s) benchmark::DoNotOptimize(oracle::check_all_flip_distances(fg, os, exec_of(s)));
}

void BM_lattice_tables(benchmark::State& s) {
    auto p = quotient::build_ar_poset(corpus::transitive_tournament(5));
    for (auto _ : s) benchmark::DoNotOptimize(quotient::lattice_tables(p, exec_of(s)));
}

void BM_validate(benchmark::State& s) {
    auto p = quotient::build_ar_poset(corpus::transitive_tournament(5));
    auto t = quotient::lattice_tables(p);
    auto c = quotient::sylvester_congruence(p);
    for (auto _ : s) benchmark::DoNotOptimize(quotient::validate_congruence(p, t, c, exec_of(s)));
}

// for scale: the loopless generator on the same graph
void BM_generator(benchmark::State& s) {
    auto g = bench_graph();
    auto order = *find_peo(g);
    for (auto _ : s) {
        chordal::SswGenerator gen(g, order);
        while (gen.next()) {
        }
        benchmark::DoNotOptimize(gen.counters().visits);
    }
}

}  // namespace

BENCHMARK(BM_enumerate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_flip_graph)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_flip_distances)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lattice_tables)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_validate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_generator)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
