// OpenMP kernels vs the serial reference, and scan throughput by worker count.
#include <random>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "frimap/reference.hpp"
#include "frimap/scan.hpp"
#include "frimap/toycnn.hpp"

using namespace frimap;
using toycnn::Kernel4;
using toycnn::Tensor3;

namespace {

Tensor3 random_tensor(int h, int w, int d, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<float> u(0.0f, 1.0f);
  Tensor3 t(h, w, d);
  for (float& v : t.values) v = u(rng);
  return t;
}

Kernel4 random_kernel(int k, int in, int out) {
  std::mt19937 rng(3);
  std::normal_distribution<float> n(0.0f, 0.1f);
  Kernel4 kr{k, k, in, out, std::vector<float>(static_cast<std::size_t>(k) * k * in * out)};
  for (float& v : kr.values) v = n(rng);
  return kr;
}

// conv2 of the default net: 15x15x64 -> 64 filters, 5x5
void BM_Conv2Parallel(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(0)));
  const Tensor3 x = random_tensor(15, 15, 64, 1);
  const Kernel4 k = random_kernel(5, 64, 64);
  const std::vector<float> b(64, 0.1f);
  for (auto _ : st) benchmark::DoNotOptimize(toycnn::conv2d_same(x, k, b));
}
BENCHMARK(BM_Conv2Parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Conv2Reference(benchmark::State& st) {
  const Tensor3 x = random_tensor(15, 15, 64, 1);
  const Kernel4 k = random_kernel(5, 64, 64);
  const std::vector<float> b(64, 0.1f);
  for (auto _ : st) benchmark::DoNotOptimize(reference::conv2d_same(x, k, b));
}
BENCHMARK(BM_Conv2Reference)->Unit(benchmark::kMillisecond);

void BM_MaxpoolLrnParallel(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(0)));
  const Tensor3 x = random_tensor(32, 32, 64, 2);
  for (auto _ : st) benchmark::DoNotOptimize(toycnn::lrn(toycnn::maxpool(x, 3, 2)));
}
BENCHMARK(BM_MaxpoolLrnParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_MaxpoolLrnReference(benchmark::State& st) {
  const Tensor3 x = random_tensor(32, 32, 64, 2);
  for (auto _ : st) benchmark::DoNotOptimize(reference::lrn(reference::maxpool(x, 3, 2), {}));
}
BENCHMARK(BM_MaxpoolLrnReference)->Unit(benchmark::kMicrosecond);

void BM_ForwardParallel(benchmark::State& st) {
  omp_set_num_threads(1);
  const toycnn::NetSpec spec;
  const toycnn::Network net(spec, toycnn::random_weights(spec, 4));
  Image img(32, 32, 3, 90);
  for (auto _ : st) benchmark::DoNotOptimize(net.logits(img));
}
BENCHMARK(BM_ForwardParallel)->Unit(benchmark::kMillisecond);

void BM_ForwardReference(benchmark::State& st) {
  const toycnn::NetSpec spec;
  const auto w = toycnn::random_weights(spec, 4);
  Image img(32, 32, 3, 90);
  for (auto _ : st) benchmark::DoNotOptimize(reference::logits(img, w, spec));
}
BENCHMARK(BM_ForwardReference)->Unit(benchmark::kMillisecond);

// Regions per second for a P=0.4 sweep of one 32x32 image (400 placements).
void BM_ScanWorkers(benchmark::State& st) {
  omp_set_num_threads(1);
  const toycnn::NetSpec spec;
  toycnn::ToyCnnClassifier be(toycnn::Network(spec, toycnn::random_weights(spec, 5)), "bench");
  Image img(32, 32, 3, 120);
  ScanConfig cfg;
  cfg.truth = 0;
  cfg.workers = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(scan_pfrac(img, 0.4, cfg, be));
  st.counters["regions/s"] = benchmark::Counter(400.0 * st.iterations(), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_ScanWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
