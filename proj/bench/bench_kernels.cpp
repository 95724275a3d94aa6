// Serial reference against the OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "monent/kernels.hpp"
#include "monent/language.hpp"

using namespace monent;
using kernels::Exec;

namespace {

kernels::SparseMatrix random_matrix(std::size_t n, std::size_t per_row) {
  std::mt19937_64 rng(n);
  std::vector<kernels::SparseMatrix::Triple> t;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < per_row; ++k) t.push_back({r, rng() % n, 1});
  }
  return kernels::SparseMatrix::from_triples(n, n, std::move(t));
}

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void BM_BigIntTotals(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, 4);
  const std::vector<mpz_class> start(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::iterate_totals(m, start, 64, exec_of(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_ShiftedPower(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, 4);
  std::vector<long double> x(n, 1.0L), y(n);
  for (auto _ : state) {
    for (int it = 0; it < 50; ++it) {
      if (state.range(1)) {
        kernels::multiply_shifted_parallel(m, 1.0L, x, y);
      } else {
        kernels::multiply_shifted_serial(m, 1.0L, x, y);
      }
      long double s = 0;
      for (long double v : y) s += v;
      for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / s;
    }
    benchmark::DoNotOptimize(x.data());
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_LanguageCounts(benchmark::State& state) {
  const Presentation p = parse_presentation(
      "arrows: a, b, c, d, e, f\nforbidden: abc, bca, cab, dd, eaf, fed, bfb, cdc, aea\n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_legal_series(p, static_cast<std::size_t>(state.range(0)), exec_of(state)));
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_BigIntTotals)->ArgsProduct({{256, 4096}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShiftedPower)->ArgsProduct({{4096, 65536}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LanguageCounts)->ArgsProduct({{128, 512}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
