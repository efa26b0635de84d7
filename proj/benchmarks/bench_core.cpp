// Microbenchmarks for the hot paths: model construction, qubit mapping,
// statevector application, grouping, and MPO compilation.

#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "orfh/exact.hpp"
#include "orfh/grouping.hpp"
#include "orfh/hubbard.hpp"
#include "orfh/jordan_wigner.hpp"
#include "orfh/mpo.hpp"
#include "orfh/pauli.hpp"
#include "orfh/rotation.hpp"

namespace {

orfh::CoefficientTensors rotated(int n_sites) {
  const orfh::CoefficientTensors fh =
      orfh::build_hubbard({.n_sites = n_sites});
  return orfh::rotate(fh, orfh::sample_rotation(2 * n_sites, 42, false));
}

void bm_build_rotate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rotated(n));
}
BENCHMARK(bm_build_rotate)->Arg(4)->Arg(6)->Arg(8);

void bm_jordan_wigner(benchmark::State& state) {
  const orfh::CoefficientTensors t = rotated(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orfh::jordan_wigner(t));
}
BENCHMARK(bm_jordan_wigner)->Arg(4)->Arg(6);

void bm_apply(benchmark::State& state) {
  const orfh::PauliSum h =
      orfh::jordan_wigner(rotated(static_cast<int>(state.range(0))));
  Eigen::VectorXcd v =
      Eigen::VectorXcd::Random(std::int64_t{1} << h.width());
  v.normalize();
  for (auto _ : state) benchmark::DoNotOptimize(orfh::apply(h, v));
}
BENCHMARK(bm_apply)->Arg(4)->Arg(6);

void bm_lanczos(benchmark::State& state) {
  const orfh::PauliSum h =
      orfh::jordan_wigner(rotated(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(orfh::lanczos_lowest(h, 1));
}
BENCHMARK(bm_lanczos)->Arg(4)->Arg(6);

void bm_group_qwc(benchmark::State& state) {
  const orfh::PauliSum h =
      orfh::jordan_wigner(rotated(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(orfh::group_qubitwise(h));
}
BENCHMARK(bm_group_qwc)->Arg(4)->Arg(6);

void bm_compile_mpo(benchmark::State& state) {
  const orfh::PauliSum h =
      orfh::jordan_wigner(rotated(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(orfh::compile_mpo(h));
}
BENCHMARK(bm_compile_mpo)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
