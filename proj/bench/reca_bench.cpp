// Parallel kernels against their serial references, at the sizes a (8,8)
// run produces: 32 sequences x 210 steps of 2560 features.

#include <benchmark/benchmark.h>

#include <random>

#include "reca/ca.hpp"
#include "reca/kernels.hpp"

using namespace reca;

namespace {

constexpr std::size_t kRows = 32 * 210;

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, (g() & 1) != 0);
    return m;
}

CAState random_state(std::size_t width) {
    std::mt19937_64 g(width);
    CAState s(width);
    for (std::size_t i = 0; i < width; ++i)
        s.set(i, (g() & 1) != 0);
    return s;
}

void BM_step(benchmark::State& st) {
    const auto s = random_state(static_cast<std::size_t>(st.range(0)));
    CAState out(s.width());
    for (auto _ : st) {
        step_into(s, Rule(90), out);
        benchmark::DoNotOptimize(out.words().data());
    }
}

void BM_step_reference(benchmark::State& st) {
    const auto s = random_state(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) {
        auto out = step_reference(s, Rule(90));
        benchmark::DoNotOptimize(out.words().data());
    }
}

void BM_transpose(benchmark::State& st) {
    const auto m = random_matrix(kRows, static_cast<std::size_t>(st.range(0)), 1);
    BitMatrix out(m.cols(), m.rows());
    for (auto _ : st)
        kernels::transpose_into(m, out);
}

void BM_transpose_reference(benchmark::State& st) {
    const auto m = random_matrix(kRows, static_cast<std::size_t>(st.range(0)), 1);
    BitMatrix out(m.cols(), m.rows());
    for (auto _ : st)
        kernels::transpose_into_reference(m, out);
}

void BM_gram(benchmark::State& st) {
    const auto m = random_matrix(kRows, static_cast<std::size_t>(st.range(0)), 2);
    BitMatrix cols(m.cols(), m.rows());
    kernels::transpose_into(m, cols);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::gram(cols));
}

void BM_gram_reference(benchmark::State& st) {
    const auto m = random_matrix(kRows, static_cast<std::size_t>(st.range(0)), 2);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::gram_reference(m));
}

void BM_affine_apply(benchmark::State& st) {
    const auto f = static_cast<std::size_t>(st.range(0));
    const auto m = random_matrix(kRows, f, 3);
    const Eigen::MatrixXd w = Eigen::MatrixXd::Random(static_cast<Eigen::Index>(f + 1), 3);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::affine_apply(m, w));
}

void BM_affine_apply_reference(benchmark::State& st) {
    const auto f = static_cast<std::size_t>(st.range(0));
    const auto m = random_matrix(kRows, f, 3);
    const Eigen::MatrixXd w = Eigen::MatrixXd::Random(static_cast<Eigen::Index>(f + 1), 3);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::affine_apply_reference(m, w));
}

} // namespace

BENCHMARK(BM_step)->Arg(160)->Arg(320);
BENCHMARK(BM_step_reference)->Arg(160)->Arg(320);
BENCHMARK(BM_transpose)->Arg(640)->Arg(2560);
BENCHMARK(BM_transpose_reference)->Arg(640)->Arg(2560);
BENCHMARK(BM_gram)->Arg(640)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram_reference)->Arg(640)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_affine_apply)->Arg(640)->Arg(2560)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_affine_apply_reference)->Arg(640)->Arg(2560)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
