#include "matmonoid/extremal.hpp"
#include "matmonoid/hash.hpp"
#include "matmonoid/tree.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>

using namespace matmonoid;

static void BM_MuDepth(benchmark::State& state) {
    MonoidParams const p(2, 3);
    auto const n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mu_depth(p, n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MuDepth)->RangeMultiplier(8)->Range(8, 1 << 18)->Complexity();

static void BM_MuBruteForce(benchmark::State& state) {
    MonoidParams const p(2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(mu_row_bruteforce(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_MuBruteForce)->DenseRange(8, 16, 4);

static void BM_BoundN0(benchmark::State& state) {
    Natural p = Natural(1) << static_cast<unsigned long>(state.range(0) - 1);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    HashParams const hp(2, 3, p);
    for (auto _ : state) benchmark::DoNotOptimize(bound_n0(hp));
}
BENCHMARK(BM_BoundN0)->Arg(64)->Arg(256)->Arg(1024)->Arg(2048);

static void BM_HashBytes(benchmark::State& state) {
    Natural p = Natural(1) << static_cast<unsigned long>(state.range(0) - 1);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    HashParams const hp(2, 3, p);
    std::vector<std::uint8_t> data(4096);
    std::mt19937 rng(7);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    for (auto _ : state) {
        HashState st(hp);
        st.update_bytes(data);
        benchmark::DoNotOptimize(st.digest());
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(data.size()));
}
BENCHMARK(BM_HashBytes)->Arg(61)->Arg(256)->Arg(2048);
BENCHMARK_MAIN();
