// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "tau4/enhanced.hpp"
#include "tau4/sat.hpp"
#include "tau4/surgery.hpp"

using namespace tau4;

namespace {

EnhancedSpace dense_space(int m) {
    std::mt19937_64 rng(5);
    BitMatrix f(m, m);
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            bool b = rng() & 1u;
            f.set(i, j, b);
            f.set(j, i, b);
        }
        f.set(i, i, rng() & 1u);
        v[i] = static_cast<int>(f.get(i, i)) + 2 * static_cast<int>(rng() & 1u);
    }
    return EnhancedSpace::make(f, v);
}

CubicForm dense_form(int n) {
    std::mt19937_64 rng(6);
    CubicForm c;
    c.n = n;
    for (int i = 0; i < n; ++i) {
        if (rng() & 1u) c.linear.insert(i);
        for (int j = i + 1; j < n; ++j) {
            if (rng() % 3 == 0) c.quadratic.insert({i, j});
            for (int k = j + 1; k < n; ++k)
                if (rng() % 7 == 0) c.cubic.insert({i, j, k});
        }
    }
    return c;
}

SymIntMatrix even_matrix(int n) {
    std::mt19937_64 rng(7);
    SymIntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 2 * (static_cast<int>(rng() % 9) - 4);
        for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = static_cast<int>(rng() % 7) - 3;
    }
    return m;
}

void BM_value_counts(benchmark::State& st) {
    EnhancedSpace s = dense_space(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(value_counts(s));
}

void BM_value_counts_serial(benchmark::State& st) {
    EnhancedSpace s = dense_space(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(value_counts_serial(s));
}

void BM_count_zeros(benchmark::State& st) {
    CubicForm c = dense_form(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(count_zeros(c));
}

void BM_count_zeros_serial(benchmark::State& st) {
    CubicForm c = dense_form(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(count_zeros_serial(c));
}

void BM_characteristic_sum(benchmark::State& st) {
    SymIntMatrix m = even_matrix(static_cast<int>(st.range(0)));
    auto subs = characteristic_sublinks(m);
    std::vector<int> arf(subs.size(), 0);
    for (auto _ : st) benchmark::DoNotOptimize(characteristic_sum(m, subs, arf));
}

void BM_characteristic_sum_serial(benchmark::State& st) {
    SymIntMatrix m = even_matrix(static_cast<int>(st.range(0)));
    auto subs = characteristic_sublinks(m);
    std::vector<int> arf(subs.size(), 0);
    for (auto _ : st) benchmark::DoNotOptimize(characteristic_sum_serial(m, subs, arf));
}

}  // namespace

BENCHMARK(BM_value_counts)->Arg(16)->Arg(20)->Arg(24);
BENCHMARK(BM_value_counts_serial)->Arg(16)->Arg(20)->Arg(24);
BENCHMARK(BM_count_zeros)->Arg(16)->Arg(20)->Arg(24);
BENCHMARK(BM_count_zeros_serial)->Arg(16)->Arg(20)->Arg(24);
BENCHMARK(BM_characteristic_sum)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_characteristic_sum_serial)->Arg(12)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
