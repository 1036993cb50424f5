#include <benchmark/benchmark.h>

#include "idem/decompose.hpp"
#include "idem/factor.hpp"
#include "idem/freeword.hpp"
#include "idem/matrix_units.hpp"
#include "idem/nf.hpp"
#include "idem/random.hpp"
#include "idem/rng.hpp"

using namespace idem;

namespace {

FieldDesc field_for(std::int64_t kind) {
    return kind == 0 ? FieldDesc::rationals() : FieldDesc::prime(5);
}

void bm_nf_mul(benchmark::State& state) {
    FieldDesc f = field_for(state.range(0));
    Rng rng(0xbe9c);
    NFElem x = random_nf(f, 8, rng);
    NFElem y = random_nf(f, 8, rng);
    for (auto _ : state) benchmark::DoNotOptimize(nf_mul(x, y));
}

void bm_normalize(benchmark::State& state) {
    FieldDesc f = field_for(state.range(0));
    Rng rng(0xbe9d);
    FreeElem x = random_free(f, 10, 4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(normalize(x));
}

void bm_factor_fp(benchmark::State& state) {
    FieldDesc f5 = FieldDesc::prime(5);
    Rng rng(0xbe9e);
    Poly p = random_poly(f5, 12, rng);
    while (p.is_zero() || p.is_constant()) p = random_poly(f5, 12, rng);
    for (auto _ : state) {
        Rng inner(0xbe9f);
        benchmark::DoNotOptimize(factor_fp(p, inner));
    }
}

void bm_decompose(benchmark::State& state) {
    FieldDesc f5 = FieldDesc::prime(5);
    Poly lam = Poly::lambda(f5);
    Poly one = Poly::one(f5);
    std::vector<FactorPower> parts = {
        {lam, 1}, {lam - one, 2}, {Poly::from_ints(f5, {1, 1, 1}), 1}};
    Poly m = lam * (lam - one) * (lam - one) * Poly::from_ints(f5, {1, 1, 1});
    Factorization fact = factor_input(m, parts);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(fact));
}

void bm_to_matrix(benchmark::State& state) {
    FieldDesc f5 = FieldDesc::prime(5);
    QuotientCtx ctx{Poly::from_ints(f5, {1, 1, 1})};
    MatrixUnits units = matrix_units(ctx);
    Rng rng(0xbea0);
    QElem x = random_q(ctx, rng);
    for (auto _ : state) benchmark::DoNotOptimize(to_matrix(x, units));
}

BENCHMARK(bm_nf_mul)->Arg(0)->Arg(1);
BENCHMARK(bm_normalize)->Arg(0)->Arg(1);
BENCHMARK(bm_factor_fp);
BENCHMARK(bm_decompose);
BENCHMARK(bm_to_matrix);

}  // namespace

BENCHMARK_MAIN();
