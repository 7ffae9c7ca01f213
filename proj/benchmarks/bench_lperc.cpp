#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "lperc/lperceptron.hpp"
#include "lperc/polyfit.hpp"

namespace {

std::vector<double> random_values(std::size_t n, std::uint32_t seed,
                                  int modulus = 10) {
    std::mt19937 rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = double(rng() % modulus) + 1.0;
    return v;
}

void BM_FitPolynomial(benchmark::State& state) {
    const auto xs = random_values(699, 1);
    const auto targets = random_values(699, 2, 6);
    const int degree = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(lperc::fit_polynomial(xs, targets, degree));
}
BENCHMARK(BM_FitPolynomial)->Arg(1)->Arg(4);

void BM_Train(benchmark::State& state) {
    const std::size_t n = 699, m = 9;
    std::mt19937 rng(3);
    std::vector<std::vector<double>> x(n, std::vector<double>(m));
    std::vector<lperc::Label> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) x[i][j] = double(rng() % 10) + 1.0;
        y[i] = rng() % 3 ? lperc::Label::Negative : lperc::Label::Positive;
    }
    lperc::Hyperparameters h{-2.0, 3.0, 1, 4, int(state.range(0)), 0.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(lperc::train(x, y, h));
}
BENCHMARK(BM_Train)->Arg(0)->Arg(2);

void BM_PredictBatch(benchmark::State& state) {
    const std::size_t n = 699, m = 9;
    std::mt19937 rng(4);
    std::vector<std::vector<double>> x(n, std::vector<double>(m));
    std::vector<lperc::Label> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) x[i][j] = double(rng() % 10) + 1.0;
        y[i] = rng() % 3 ? lperc::Label::Negative : lperc::Label::Positive;
    }
    lperc::Hyperparameters h{-2.0, 3.0, 4, 4, 0, 0.5};
    const auto model = lperc::train(x, y, h);
    for (auto _ : state)
        benchmark::DoNotOptimize(lperc::predict_batch(model, x));
}
BENCHMARK(BM_PredictBatch);

} // namespace

BENCHMARK_MAIN();
