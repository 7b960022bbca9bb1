#include <benchmark/benchmark.h>

#include "planarize/catalog.hpp"
#include "planarize/classify.hpp"
#include "planarize/intersection.hpp"
#include "planarize/parser.hpp"
#include "planarize/planarity.hpp"

using namespace planarize;

namespace {

const RationalMap& form(const char* label) { return find_normal_form(label)->map; }

void BM_PlanarityCubic(benchmark::State& state) {
    const auto& m = form("C1");
    for (auto _ : state) benchmark::DoNotOptimize(is_planarization(m));
}
BENCHMARK(BM_PlanarityCubic)->Unit(benchmark::kMillisecond);

void BM_SymbolicLineDeterminant(benchmark::State& state) {
    const auto& m = form("C3");
    for (auto _ : state) benchmark::DoNotOptimize(determinant(line_restriction_matrix(m)));
}
BENCHMARK(BM_SymbolicLineDeterminant)->Unit(benchmark::kMillisecond);

void BM_Implicitize(benchmark::State& state) {
    static const char* labels[] = {"Q10", "Q8", "Q1", "C1"};
    const auto& m = form(labels[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(implicitize(m));
    state.SetLabel(labels[state.range(0)]);
}
BENCHMARK(BM_Implicitize)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_DualMap(benchmark::State& state) {
    const auto& m = form(state.range(0) ? "C1" : "Q1");
    for (auto _ : state) benchmark::DoNotOptimize(dual_map(m));
}
BENCHMARK(BM_DualMap)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BaseLocus(benchmark::State& state) {
    const auto& m = form(state.range(0) ? "C6" : "C3");
    for (auto _ : state) benchmark::DoNotOptimize(base_locus(m));
}
BENCHMARK(BM_BaseLocus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TopologicalDegree(benchmark::State& state) {
    const auto& m = form("C1");
    for (auto _ : state) benchmark::DoNotOptimize(topological_degree(m));
}
BENCHMARK(BM_TopologicalDegree)->Unit(benchmark::kMillisecond);

void BM_IntersectionMultiplicity(benchmark::State& state) {
    // y^2 - x^3 against y - x^2 at the origin: multiplicity 3... plus tangency.
    const Ring r({"a", "b"});
    Poly f(r), g(r);
    f.add_term(Monomial::variable(1, 2), Rational(1));
    f.add_term(Monomial::variable(0, 3), Rational(-1));
    g.add_term(Monomial::variable(1, 2), Rational(1));
    g.add_term(Monomial::variable(0, 5), Rational(-1));
    const std::vector<QuadExt> origin = {QuadExt(0), QuadExt(0)};
    for (auto _ : state) benchmark::DoNotOptimize(intersection_multiplicity(f, g, origin));
}
BENCHMARK(BM_IntersectionMultiplicity);

void BM_ClassifyQuadric(benchmark::State& state) {
    const RationalMap m = parse_rational_map("[3x^2-2xy+y^2+xz : x^2+5yz : -2x^2+y^2+z^2 : 4xy - z^2]");
    for (auto _ : state) benchmark::DoNotOptimize(classify_quadric_image(m));
}
BENCHMARK(BM_ClassifyQuadric)->Unit(benchmark::kMillisecond);

void BM_ParseMap(benchmark::State& state) {
    const std::string text = "[x^2*z + y^2*z - 3/7*x*y*z : y*(x^2+z^2) : x*(y^2+z^2) : x*y*z]";
    for (auto _ : state) benchmark::DoNotOptimize(parse_rational_map(text));
}
BENCHMARK(BM_ParseMap);

}  // namespace

BENCHMARK_MAIN();
