#include <benchmark/benchmark.h>

#include "msrcert/cactus.hpp"
#include "msrcert/cert.hpp"
#include "msrcert/ortho.hpp"

using namespace msrcert;

namespace {

Graph corpus_graph(int n) {
    return generate_cactus(n, (n - 1) / 4, 0xBE9C);
}

void BM_RecognizeCactus(benchmark::State& state) {
    Graph g = corpus_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        CactusProfile p = recognize_cactus(g);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_RecognizeCactus)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_FindOrdering(benchmark::State& state) {
    Graph g = corpus_graph(static_cast<int>(state.range(0)));
    CactusProfile p = recognize_cactus(g);
    for (auto _ : state) {
        ConstructionOrdering ord = find_construction_ordering(g, p);
        benchmark::DoNotOptimize(ord);
    }
}
BENCHMARK(BM_FindOrdering)->Arg(16)->Arg(64)->Arg(256);

void BM_BuildRepresentation(benchmark::State& state) {
    Graph g = corpus_graph(static_cast<int>(state.range(0)));
    BuildOptions options;
    options.dimension = 5;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        options.seed = seed++;
        BuildOutcome outcome = build_representation(g, options);
        benchmark::DoNotOptimize(outcome);
    }
}
BENCHMARK(BM_BuildRepresentation)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_VerifyRepresentation(benchmark::State& state) {
    Graph g = corpus_graph(static_cast<int>(state.range(0)));
    BuildOptions options;
    options.dimension = 5;
    BuildOutcome outcome = build_representation(g, options);
    for (auto _ : state) {
        GramCertificate cert =
            verify_representation(outcome.representation, outcome.representation.target);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_VerifyRepresentation)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_GccCheck(benchmark::State& state) {
    Graph g = corpus_graph(static_cast<int>(state.range(0)));
    GccOptions options;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        options.seed = seed++;
        GccReport report = gcc_check(g, options);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_GccCheck)->Arg(8)->Arg(16)->Arg(32);

} // namespace

BENCHMARK_MAIN();
