#include <benchmark/benchmark.h>

#include "wdvv/calibration.hpp"
#include "wdvv/inversion.hpp"
#include "wdvv/parser.hpp"
#include "wdvv/symmetry.hpp"

namespace {

wdvv::FrobeniusSolution a2() {
  return wdvv::FrobeniusSolution(
      2, wdvv::parse_rational("1/2*v1^2*v2 + 1/72*v2^4"), wdvv::Scalar(1, 3),
      {wdvv::Scalar(-1, 6), wdvv::Scalar(1, 6)});
}

wdvv::FrobeniusSolution a3() {
  return wdvv::FrobeniusSolution(
      2 + 1,
      wdvv::parse_rational(
          "1/2*v1^2*v3 + 1/2*v1*v2^2 + 1/4*v2^2*v3^2 + 1/60*v3^5"),
      wdvv::Scalar(1, 2),
      {wdvv::Scalar(-1, 4), wdvv::Scalar(0), wdvv::Scalar(1, 4)});
}

void bm_check_wdvv_a3(benchmark::State& state) {
  auto s = a3();
  for (auto _ : state) {
    std::string why;
    benchmark::DoNotOptimize(wdvv::check_wdvv(s, &why));
  }
}
BENCHMARK(bm_check_wdvv_a3);

void bm_invert_a3(benchmark::State& state) {
  auto s = a3();
  for (auto _ : state) {
    auto shat = wdvv::invert_solution(s);
    benchmark::DoNotOptimize(shat);
  }
}
BENCHMARK(bm_invert_a3);

void bm_build_calibration_a2(benchmark::State& state) {
  auto s = a2();
  const int P = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto cal = wdvv::build_calibration(s, P);
    benchmark::DoNotOptimize(cal);
  }
}
BENCHMARK(bm_build_calibration_a2)->Arg(3)->Arg(5)->Arg(7);

void bm_omega_table_a2(benchmark::State& state) {
  auto s = a2();
  const int P = static_cast<int>(state.range(0));
  auto cal = wdvv::build_calibration(s, 2 * P - 1);
  for (auto _ : state) {
    auto om = wdvv::omega_table(s, cal, P);
    benchmark::DoNotOptimize(om);
  }
}
BENCHMARK(bm_omega_table_a2)->Arg(2)->Arg(3);

void bm_transform_calibration_a2(benchmark::State& state) {
  auto s = a2();
  auto cal = wdvv::build_calibration(s, 5);
  for (auto _ : state) {
    auto hat = wdvv::transform_calibration(s, cal);
    benchmark::DoNotOptimize(hat);
  }
}
BENCHMARK(bm_transform_calibration_a2);

}  // namespace

BENCHMARK_MAIN();
