#include <benchmark/benchmark.h>

#include "curvachay/ball.hpp"
#include "curvachay/curvature_matrix.hpp"
#include "curvachay/ollivier.hpp"
#include "curvachay/todd_coxeter.hpp"
#include "curvachay/transport.hpp"

using namespace curvachay;

namespace {

void BM_ball_free_group(benchmark::State& state) {
    Presentation p = parse_presentation("raach { a:inf, b:inf, c:inf; }");
    int radius = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ball(p, radius).n());
}
BENCHMARK(BM_ball_free_group)->Arg(2)->Arg(3)->Arg(4);

void BM_curvature_matrix_hypercube(benchmark::State& state) {
    Presentation p = parse_presentation(
        "raach { a:2, b:2, c:2, d:2; commute (a,b), (a,c), (a,d), (b,c), (b,d), (c,d); }");
    LocalGraph g = ball(p, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(bakry_emery(g, g.root, LaplacianKind::non_normalized()).value);
}
BENCHMARK(BM_curvature_matrix_hypercube);

void BM_edge_curvature_lp(benchmark::State& state) {
    Presentation p = parse_presentation("raach { a:2, b:3; commute (a,b); }");
    LocalGraph g = ball(p, 4);
    int y = g.neighbors(g.root).front();
    for (auto _ : state)
        benchmark::DoNotOptimize(kappa_lly_laplacian(g, g.root, y, LaplacianKind::normalized()).value);
}
BENCHMARK(BM_edge_curvature_lp);

void BM_edge_curvature_transport(benchmark::State& state) {
    Presentation p = parse_presentation("raach { a:2, b:3; commute (a,b); }");
    LocalGraph g = ball(p, 4);
    int y = g.neighbors(g.root).front();
    for (auto _ : state) benchmark::DoNotOptimize(kappa_lly_transport(g, g.root, y));
}
BENCHMARK(BM_edge_curvature_transport);

void BM_coset_enumeration_dihedral(benchmark::State& state) {
    std::string rel = "a b";
    for (int i = 1; i < state.range(0); ++i) rel += " a b";
    Presentation p = parse_presentation("group <a,b | a^2, b^2, " + rel + ">");
    for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p, 4096).n());
}
BENCHMARK(BM_coset_enumeration_dihedral)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
