#include "knnadv/dataset.hpp"
#include "knnadv/kernels.hpp"
#include "knnadv/oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace knnadv;

namespace {

Matrix random_points(Eigen::Index n, Eigen::Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix m(n, d);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = u(rng);
  return m;
}

// Arguments: number of points, dimension.
void kernel_args(benchmark::internal::Benchmark* b) {
  b->Args({2000, 784})->Args({20000, 784})->Args({20000, 32});
}

template <auto Kernel>
void BM_SquaredL2(benchmark::State& state) {
  const Matrix pts = random_points(state.range(0), state.range(1), 1);
  const Vector q = random_points(1, state.range(1), 2).row(0).transpose();
  std::vector<double> out(static_cast<std::size_t>(pts.rows()));
  for (auto _ : state) {
    Kernel(pts, q, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * pts.rows());
}

template <auto Kernel>
void BM_Cosine(benchmark::State& state) {
  const Matrix pts = random_points(state.range(0), state.range(1), 1);
  const Vector q = random_points(1, state.range(1), 2).row(0).transpose();
  std::vector<double> norms(static_cast<std::size_t>(pts.rows()));
  for (Eigen::Index i = 0; i < pts.rows(); ++i) norms[static_cast<std::size_t>(i)] = pts.row(i).norm();
  std::vector<double> out(norms.size());
  for (auto _ : state) {
    Kernel(pts, norms, q, q.norm(), out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * pts.rows());
}

void BM_Oracle(benchmark::State& state) {
  const auto n = state.range(0);
  Matrix pts = random_points(n, 8, 3);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i % 2);
  const Dataset ds(pts, labels, 2);
  const Vector x = ds.row(0).transpose();
  OracleOptions opt;
  opt.box = true;
  opt.parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_min_attack(ds, x, ds.label(0), 3, opt).norm);
}

}  // namespace

BENCHMARK(BM_SquaredL2<kernels::squared_l2_serial>)->Apply(kernel_args);
BENCHMARK(BM_SquaredL2<kernels::squared_l2_parallel>)->Apply(kernel_args);
BENCHMARK(BM_Cosine<kernels::cosine_serial>)->Apply(kernel_args);
BENCHMARK(BM_Cosine<kernels::cosine_parallel>)->Apply(kernel_args);
// Arguments: training points, parallel flag.
BENCHMARK(BM_Oracle)->Args({40, 0})->Args({40, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
