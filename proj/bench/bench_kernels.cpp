// Production kernels (OpenMP) against the serial reference sums.

#include <benchmark/benchmark.h>

#include <random>

#include "torusq/reference.hpp"

using namespace torusq;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 g(0x62656e63);
  return g;
}

ZdVector random_state(int d) {
  std::normal_distribution<double> n;
  std::vector<Complex> v(static_cast<std::size_t>(d));
  for (auto& z : v) z = {n(rng()), n(rng())};
  ZdVector out(std::move(v));
  return out.scaled(1.0 / out.norm());
}

ClassicalSymbol random_symbol(int d) {
  std::normal_distribution<double> n;
  PhaseSpaceMap f(d);
  for (int m = 0; m < d; ++m)
    for (int k = 0; k < d; ++k) f(m, k) = n(rng());
  return ClassicalSymbol::general(std::move(f));
}

Weight cs_weight(int d) { return Weight::coherent_state(realize_fiducial(fiducial::VonMises{1.0}, d)); }

void BM_gabor(benchmark::State& s) {
  const int d = static_cast<int>(s.range(0));
  const auto phi = random_state(d), fid = realize_fiducial(fiducial::VonMises{1.0}, d);
  for (auto _ : s) benchmark::DoNotOptimize(gabor_transform(phi, fid));
}
void BM_gabor_reference(benchmark::State& s) {
  const int d = static_cast<int>(s.range(0));
  const auto phi = random_state(d), fid = realize_fiducial(fiducial::VonMises{1.0}, d);
  for (auto _ : s) benchmark::DoNotOptimize(reference::gabor_transform(phi, fid));
}

void BM_quantization_operator(benchmark::State& s) {
  const auto w = cs_weight(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(quantization_operator(w));
}
void BM_quantization_operator_reference(benchmark::State& s) {
  const auto w = cs_weight(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(reference::quantization_operator(w));
}

void BM_quantize(benchmark::State& s) {
  const int d = static_cast<int>(s.range(0));
  const auto w = cs_weight(d);
  const auto f = random_symbol(d);
  for (auto _ : s) benchmark::DoNotOptimize(quantize(f, w));
}
void BM_quantize_reference(benchmark::State& s) {
  const int d = static_cast<int>(s.range(0));
  const auto w = cs_weight(d);
  const auto f = random_symbol(d);
  for (auto _ : s) benchmark::DoNotOptimize(reference::quantize(f, w));
}

void BM_symplectic_dft(benchmark::State& s) {
  const auto f = random_symbol(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(symplectic_dft(f.values()));
}
void BM_symplectic_dft_reference(benchmark::State& s) {
  const auto f = random_symbol(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(reference::symplectic_dft(f.values()));
}

void BM_wigner(benchmark::State& s) {
  const auto psi = random_state(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(wigner(psi));
}
void BM_wigner_reference(benchmark::State& s) {
  const auto psi = random_state(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(reference::wigner(psi));
}

void BM_portrait(benchmark::State& s) {
  const int d = static_cast<int>(s.range(0));
  const auto w = cs_weight(d);
  const auto A = quantize(random_symbol(d), w);
  for (auto _ : s) benchmark::DoNotOptimize(portrait(A, w));
}
void BM_portrait_reference(benchmark::State& s) {
  const int d = static_cast<int>(s.range(0));
  const auto w = cs_weight(d);
  const auto A = quantize(random_symbol(d), w);
  for (auto _ : s) benchmark::DoNotOptimize(reference::portrait(A, w));
}

}  // namespace

// reference routines are O(d^4) to O(d^5); keep their sizes small
BENCHMARK(BM_gabor)->Arg(15)->Arg(61)->Arg(255);
BENCHMARK(BM_gabor_reference)->Arg(15)->Arg(61);
BENCHMARK(BM_quantization_operator)->Arg(15)->Arg(61)->Arg(255);
BENCHMARK(BM_quantization_operator_reference)->Arg(15)->Arg(31);
BENCHMARK(BM_quantize)->Arg(15)->Arg(61)->Arg(255);
BENCHMARK(BM_quantize_reference)->Arg(15)->Arg(31);
BENCHMARK(BM_symplectic_dft)->Arg(15)->Arg(61)->Arg(255);
BENCHMARK(BM_symplectic_dft_reference)->Arg(15)->Arg(61);
BENCHMARK(BM_wigner)->Arg(15)->Arg(61)->Arg(255);
BENCHMARK(BM_wigner_reference)->Arg(15)->Arg(31);
BENCHMARK(BM_portrait)->Arg(15)->Arg(61)->Arg(255);
BENCHMARK(BM_portrait_reference)->Arg(15)->Arg(31);

BENCHMARK_MAIN();
