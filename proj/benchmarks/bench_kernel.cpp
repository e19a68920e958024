#include <benchmark/benchmark.h>

#include <random>

#include "hopfaz/en_family.hpp"

using namespace hopfaz;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(d(rng));
    return m;
}

ENParams generic(std::size_t n, const Field& f = Field::rational())
{
    ENParams p = ENParams::zero(n, f);
    p.A = random_matrix(f, n, 7);
    p.alpha = f.from_int(2);
    for (std::size_t i = 0; i < n; ++i) {
        p.gamma[i] = f.from_int(static_cast<long long>(i) + 1);
        for (std::size_t j = 0; j <= i; ++j) p.Lambda(i, j) = f.from_int(static_cast<long long>(i + j) - 1);
    }
    return p;
}

void BM_DetRational(benchmark::State& state)
{
    Matrix m = random_matrix(Field::rational(), static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DetRational)->Arg(16)->Arg(32)->Arg(64);

void BM_DetPrime(benchmark::State& state)
{
    Matrix m = random_matrix(Field::prime(1000003), static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DetPrime)->Arg(16)->Arg(32)->Arg(64);

void BM_CocycleFromClifford(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    ENParams p = generic(n);
    HopfAlgebra en = build_en(n);
    for (auto _ : state) benchmark::DoNotOptimize(cocycle_en(p, en));
}
BENCHMARK(BM_CocycleFromClifford)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_TwistedRform(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    ENParams p = generic(n);
    HopfAlgebra en = build_en(n);
    Functional2 sigma = cocycle_en(p, en), r = rform_en(p.A);
    for (auto _ : state) benchmark::DoNotOptimize(twisted_rform(r, sigma, en));
}
BENCHMARK(BM_TwistedRform)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BuildF(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    ENParams p = generic(n);
    HopfAlgebra en = build_en(n);
    ComoduleAlgebra a = build_a_sigma(en, cocycle_en(p, en));
    Functional2 r = rform_en(p.A);
    for (auto _ : state) benchmark::DoNotOptimize(build_F(a, r));
}
BENCHMARK(BM_BuildF)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CleftTheta(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    ENParams p = generic(n);
    HopfAlgebra en = build_en(n);
    Functional2 sigma = cocycle_en(p, en), r = rform_en(p.A);
    for (auto _ : state) benchmark::DoNotOptimize(is_azumaya_cleft(en, sigma, r));
}
BENCHMARK(BM_CleftTheta)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_FGRoute(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    ENParams p = generic(n);
    HopfAlgebra en = build_en(n);
    ComoduleAlgebra a = build_a_sigma(en, cocycle_en(p, en));
    Functional2 r = rform_en(p.A);
    for (auto _ : state) benchmark::DoNotOptimize(is_azumaya(a, r));
}
BENCHMARK(BM_FGRoute)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DeterminantCriterion(benchmark::State& state)
{
    ENParams p = generic(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(en_azumaya_criterion(p));
}
BENCHMARK(BM_DeterminantCriterion)->Arg(2)->Arg(8);

} // namespace

BENCHMARK_MAIN();
