#include <benchmark/benchmark.h>

#include "homds/codes.hpp"
#include "homds/patterns.hpp"
#include "homds/rng.hpp"

using namespace homds;

namespace {

Mat random_mat(const Field& f, std::uint32_t r, std::uint32_t c, Rng& rng) {
    Mat m(f, r, c);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < c; ++j) m.set(i, j, f.sample_uniform(rng));
    return m;
}

void BM_mul_prime61(benchmark::State& state) {
    const Field f = Field::make((1ULL << 61) - 1, 1);
    Rng rng(1);
    Fe a = f.sample_uniform(rng), b = f.sample_uniform(rng);
    for (auto _ : state) {
        a = f.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_mul_prime61);

void BM_mul_gf8(benchmark::State& state) {
    const Field f = Field::make(2, 3);
    Rng rng(1);
    Fe a = 1 + rng.below(7), b = 1 + rng.below(7);
    for (auto _ : state) {
        a = f.mul(a == 0 ? 1 : a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_mul_gf8);

void BM_rank_12x12_prime31(benchmark::State& state) {
    const Field f = Field::make(2147483647ULL, 1);
    Rng rng(2);
    const Mat m = random_mat(f, 12, 12, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_of(m));
    }
}
BENCHMARK(BM_rank_12x12_prime31);

void BM_is_mds_ell_rs_6_3(benchmark::State& state) {
    const Field f = Field::make(2147483647ULL, 1);
    Rng rng(3);
    Mat g(f, 3, 6);
    std::vector<Fe> xs;
    while (xs.size() < 6) {
        const Fe x = f.sample_uniform(rng);
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    for (std::uint32_t j = 0; j < 6; ++j)
        for (std::uint32_t i = 0; i < 3; ++i) g.set(i, j, f.pow(xs[j], static_cast<std::int64_t>(i)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_mds_ell(g, 3));
    }
}
BENCHMARK(BM_is_mds_ell_rs_6_3);

void BM_gid_order3(benchmark::State& state) {
    Config c;
    c.k = 4;
    c.b = 2;
    c.pairs = {{1, 0b0011}, {0, 0b0110}, {2, 0b1000}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gid(c));
    }
}
BENCHMARK(BM_gid_order3);

}  // namespace

BENCHMARK_MAIN();
