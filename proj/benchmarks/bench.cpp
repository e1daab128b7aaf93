#include "posetcoho/coxeter.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace posetcoho;

namespace {

IntMat random_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> dist(-20, 20);
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

void bench_smith(benchmark::State& state) {
    std::mt19937 rng(42);
    IntMat m = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smith(m, true).rank);
}
BENCHMARK(bench_smith)->Arg(8)->Arg(16)->Arg(32);

GradedPoset projective_plane() {
    std::vector<std::string> ids = {"u", "v", "x", "a", "b", "c", "d", "e", "f", "A", "B", "C", "D"};
    std::vector<int> deg = {0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2};
    std::vector<std::pair<std::string, std::string>> rel = {
        {"a", "u"}, {"a", "v"}, {"d", "u"}, {"d", "v"}, {"b", "u"}, {"b", "x"}, {"f", "u"}, {"f", "x"},
        {"c", "v"}, {"c", "x"}, {"e", "v"}, {"e", "x"}, {"A", "a"}, {"A", "b"}, {"A", "c"}, {"B", "a"},
        {"B", "e"}, {"B", "f"}, {"C", "b"}, {"C", "d"}, {"C", "e"}, {"D", "c"}, {"D", "d"}, {"D", "f"},
    };
    return GradedPoset(ids, deg, rel);
}

void bench_projective_plane_pipeline(benchmark::State& state) {
    GradedPoset p = projective_plane();
    for (auto _ : state) {
        CertifyOutcome cert = certify_simplex_like(p);
        FreeCochainComplex complex = full_complex(FunctorSequence::build(p, local_family(p, cert.cert)));
        benchmark::DoNotOptimize(cohomology(complex));
    }
}
BENCHMARK(bench_projective_plane_pipeline);

void bench_coxeter_pipeline(benchmark::State& state) {
    CoxeterSystem sys;
    sys.generators = {"s1", "s2", "s3"};
    sys.matrix = {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}};
    for (auto _ : state) {
        CoxeterGroup g = enumerate_group(sys);
        CoxeterComplex cx = coxeter_complex(sys, g);
        FreeCochainComplex complex = full_complex(FunctorSequence::build(cx.poset, local_family(cx.poset, cx.cert)));
        GlobalCoveringFamily fam = coxeter_family(g, cx);
        benchmark::DoNotOptimize(cohomology(reduced_complex(complex, fam).complex));
    }
}
BENCHMARK(bench_coxeter_pipeline);

}  // namespace

BENCHMARK_MAIN();
