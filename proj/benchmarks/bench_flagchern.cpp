#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "flagchern/flaggeom.hpp"
#include "flagchern/parser.hpp"
#include "flagchern/residue.hpp"

using namespace flagchern;

namespace {

void BM_ResidueSum_F112(benchmark::State& state) {
    const Dims dims({1, 1, 2});
    const SymPolyExpr f = SymPolyExpr::c_lambda(Partition({1, 1, 1, 1, 1}));
    const Assignment x = Assignment::standard(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(residue_sum(dims, f, x));
    }
}
BENCHMARK(BM_ResidueSum_F112);

void BM_ResidueSum_FullFlag5(benchmark::State& state) {
    const Dims dims({1, 1, 1, 1, 1});  // 120 fixed points, d = 10
    const SymPolyExpr f = SymPolyExpr::c_lambda(Partition(std::vector<unsigned>(10, 1)));
    const Assignment x = Assignment::standard(5);
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(residue_sum(dims, f, x, workers));
    }
}
BENCHMARK(BM_ResidueSum_FullFlag5)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_ResidueSum_FullFlag6(benchmark::State& state) {
    const Dims dims({1, 1, 1, 1, 1, 1});  // 720 fixed points, d = 15
    const SymPolyExpr f = SymPolyExpr::c_lambda(Partition(std::vector<unsigned>(15, 1)));
    const Assignment x = Assignment::standard(6);
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(residue_sum(dims, f, x, workers));
    }
}
BENCHMARK(BM_ResidueSum_FullFlag6)->Arg(1)->Arg(8);

void BM_EnumerateDecompositions(benchmark::State& state) {
    const Dims dims({1, 1, 1, 1, 1, 1});
    for (auto _ : state) {
        unsigned long n = 0;
        for_each_decomposition(dims, [&](const Decomposition&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_EnumerateDecompositions);

void BM_UnrankDecomposition(benchmark::State& state) {
    const Dims dims({2, 2, 2});  // 90 decompositions
    Integer rank(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(unrank_decomposition(dims, rank));
        rank = (rank + 1) % 90;
    }
}
BENCHMARK(BM_UnrankDecomposition);

void BM_ElementarySymmetricTable(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> vals;
    for (int i = 0; i < 15; ++i) vals.push_back(make_rational(num(rng), den(rng)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(elementary_symmetric_table(15, vals));
    }
}
BENCHMARK(BM_ElementarySymmetricTable);

void BM_WeightMultiset(benchmark::State& state) {
    const Dims dims({2, 2, 2});
    const Decomposition dec(dims, {{1, 4}, {2, 5}, {3, 6}});
    const Assignment x = Assignment::standard(6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weight_multiset(dec, x));
    }
}
BENCHMARK(BM_WeightMultiset);

void BM_ParseExpr(benchmark::State& state) {
    const std::string text = "e1^3*e2 - 5/3*p2*p3 + (e1 - p1)*(e2 + 7)";
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_expr(text));
    }
}
BENCHMARK(BM_ParseExpr);

void BM_NumericWeights(benchmark::State& state) {
    const Dims dims({1, 2, 2});
    const Decomposition dec(dims, {{3}, {1, 5}, {2, 4}});
    const std::vector<long> k{5, -2, 7, 1, -4};
    std::mt19937_64 rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric_weights(dims, dec, k, rng));
    }
}
BENCHMARK(BM_NumericWeights);

}  // namespace

BENCHMARK_MAIN();
