#include <benchmark/benchmark.h>

#include "sl2/frontier.hpp"
#include "sl2/laurent.hpp"
#include "sl2/linrec.hpp"
#include "sl2/quiver.hpp"

namespace {

using namespace sl2;

Quiver e6_tilde() {
    std::vector<Arrow> arrows;
    for (const char* arm : {"1", "2", "3"}) {
        arrows.emplace_back(std::string("a") + arm, std::string("b") + arm, 1);
        arrows.emplace_back(std::string("b") + arm, "c", 1);
    }
    return Quiver({"a1", "a2", "a3", "b1", "b2", "b3", "c"}, arrows);
}

void bm_tiling_window(benchmark::State& state) {
    const Frontier f = Frontier::from_text("xxy|xxyyx|xy");
    const long long n = state.range(0);
    for (auto _ : state) {
        const TilingOracle oracle = TilingOracle::for_frontier(f);
        benchmark::DoNotOptimize(oracle.window(-n / 2, -n / 2, n, n));
    }
    state.SetComplexityN(n);
}
BENCHMARK(bm_tiling_window)->Arg(8)->Arg(16)->Arg(32)->Complexity();

void bm_frieze_numeric(benchmark::State& state) {
    const Quiver q = e6_tilde();
    for (auto _ : state) {
        benchmark::DoNotOptimize(frieze_numeric(q, state.range(0)));
    }
}
BENCHMARK(bm_frieze_numeric)->Arg(10)->Arg(20)->Arg(40);

void bm_frieze_symbolic(benchmark::State& state) {
    const Quiver q({"1", "2", "3"}, {{"1", "2", 1}, {"1", "3", 1}, {"3", "2", 1}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(frieze_symbolic(q, state.range(0)));
    }
}
BENCHMARK(bm_frieze_symbolic)->Arg(3)->Arg(5)->Arg(6);

void bm_laurent_mul(benchmark::State& state) {
    // dense bivariate operands of the given support size
    LaurentPoly p, q;
    const long n = static_cast<long>(state.range(0));
    for (long i = -n; i <= n; ++i) {
        p += LaurentPoly::term(Monomial::variable("x", i) * Monomial::variable("y", -i), i + 2 * n);
        q += LaurentPoly::term(Monomial::variable("x", -i) * Monomial::variable("y", i / 2), 3);
    }
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(bm_laurent_mul)->Arg(8)->Arg(16)->Arg(32);

void bm_guess_recursion(benchmark::State& state) {
    const Frontier f = Frontier::from_text("xxy||xxy");
    const IntSeq values = ray(f, {0, 1}, {1, 1}, 26);
    QVec terms;
    for (const Integer& v : values) terms.emplace_back(v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(guess_recursion(terms, state.range(0)));
    }
}
BENCHMARK(bm_guess_recursion)->Arg(4)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
