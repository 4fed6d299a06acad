#include "benchmark/benchmark.h"

#include "slidepoly/bases.hpp"
#include "slidepoly/expansion.hpp"
#include "slidepoly/filling.hpp"
#include "slidepoly/insertion.hpp"

using namespace slidepoly;

namespace {

WeakComposition shape_of_size(int n) {
    // a zigzag shape with interior zeros, the hard case for pruning
    std::vector<int> parts;
    int left = n;
    int part = 1;
    while (left > 0) {
        int take = std::min(part, left);
        parts.push_back(take);
        parts.push_back(0);
        left -= take;
        ++part;
    }
    return WeakComposition(std::move(parts));
}

void BM_EnumerateSemistandard(benchmark::State& state) {
    WeakComposition a = shape_of_size(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_enumeration_cache();
        benchmark::DoNotOptimize(enumerate(FamilyTag::SSRIF, a));
    }
}
BENCHMARK(BM_EnumerateSemistandard)->Arg(6)->Arg(8)->Arg(10);

void BM_BasisPolynomial(benchmark::State& state) {
    WeakComposition a = shape_of_size(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_enumeration_cache();
        clear_basis_cache();
        benchmark::DoNotOptimize(basis_polynomial(BasisTag::QKEY, a));
    }
}
BENCHMARK(BM_BasisPolynomial)->Arg(6)->Arg(8);

void BM_SlideExpansion(benchmark::State& state) {
    WeakComposition a = shape_of_size(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_enumeration_cache();
        benchmark::DoNotOptimize(expand_drev_to_fslide(a));
    }
}
BENCHMARK(BM_SlideExpansion)->Arg(6)->Arg(8);

void BM_InsertionRoundTrip(benchmark::State& state) {
    WeakComposition a = shape_of_size(static_cast<int>(state.range(0)));
    auto domain = enumerate(FamilyTag::SIF, a);
    for (auto _ : state)
        for (const Filling& u : domain)
            benchmark::DoNotOptimize(rapture_inverse(weak_insert(u)));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(domain.size()));
}
BENCHMARK(BM_InsertionRoundTrip)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
