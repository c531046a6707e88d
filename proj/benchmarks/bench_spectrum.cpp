#include <benchmark/benchmark.h>

#include "qes/analysis.hpp"

namespace {

qes::QesModel sextic(int two_j) { return qes::make_sextic(qes::SexticParams::from_mu(1.0, two_j)); }

void BM_BuildBlock(benchmark::State& state) {
  const auto m = sextic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qes::build_block(m.combo, m.rep));
}
BENCHMARK(BM_BuildBlock)->DenseRange(0, 24, 8);

void BM_ClosedFormBlock(benchmark::State& state) {
  const auto m = sextic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qes::closed_form_block(m));
}
BENCHMARK(BM_ClosedFormBlock)->DenseRange(0, 24, 8);

void BM_EigenSolve(benchmark::State& state) {
  const auto m = sextic(static_cast<int>(state.range(0)));
  const auto block = qes::build_block(m.combo, m.rep);
  for (auto _ : state) benchmark::DoNotOptimize(qes::eigen_solve(block));
}
BENCHMARK(BM_EigenSolve)->DenseRange(0, 24, 4);

void BM_ResidualSup(benchmark::State& state) {
  const auto m = sextic(4);
  const qes::Wavefunction w{m, qes::solve_model(m).levels.front()};
  const auto xs = qes::default_residual_sample(m.family);
  for (auto _ : state) benchmark::DoNotOptimize(qes::residual_sup(w, xs));
}
BENCHMARK(BM_ResidualSup);

void BM_FdVerify(benchmark::State& state) {
  const auto m = sextic(1);
  const auto level = qes::solve_model(m).levels.front();
  const auto grid = qes::default_grid(m.family, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qes::fd_verify(m, level, grid));
}
BENCHMARK(BM_FdVerify)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
