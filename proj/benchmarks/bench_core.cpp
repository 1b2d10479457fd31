#include <benchmark/benchmark.h>

#include <random>

#include "weylwit/iso_witness.hpp"
#include "weylwit/matrix.hpp"
#include "weylwit/poly.hpp"
#include "weylwit/weyl.hpp"

using namespace weylwit;

namespace {

Matrix random_int_matrix(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = GaussRational(d(rng));
    return m;
}

void bm_char_poly(benchmark::State& state) {
    Matrix m = random_int_matrix(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(bm_char_poly)->Arg(6)->Arg(10)->Arg(14);

void bm_rank(benchmark::State& state) {
    Matrix m = random_int_matrix(static_cast<int>(state.range(0)), 43);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(bm_rank)->Arg(8)->Arg(16)->Arg(24);

void bm_cyclotomic_factorization(benchmark::State& state) {
    Poly p = cyclotomic(30) * cyclotomic(24) * cyclotomic(6) * cyclotomic(6);
    for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_factorization(p));
}
BENCHMARK(bm_cyclotomic_factorization);

void bm_witness_pipeline(benchmark::State& state) {
    const IsoBlockSeq seq = derive_iso({5, 3, 1}, {3});
    for (auto _ : state) {
        const IsoWitness w = normalize(build_iso(seq));
        benchmark::DoNotOptimize(validate(w).ok());
    }
}
BENCHMARK(bm_witness_pipeline);

void bm_weyl_minimize(benchmark::State& state) {
    const RootSystem rs = build_weyl("E8");
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(0, rs.rank - 1);
    WeylMat w = weyl_identity(rs);
    for (int i = 0; i < 60; ++i) w = weyl_mul(rs, w, rs.simple_refl[d(rng)]);
    for (auto _ : state) benchmark::DoNotOptimize(cyclic_shift_minimize(rs, w));
}
BENCHMARK(bm_weyl_minimize);

void bm_weyl_search(benchmark::State& state) {
    const RootSystem rs = build_weyl("F4");
    for (auto _ : state)
        benchmark::DoNotOptimize(find_elliptic_rep(rs, {{4, 2}}, 1000000, 1));
}
BENCHMARK(bm_weyl_search);

}  // namespace

BENCHMARK_MAIN();
