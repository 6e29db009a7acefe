#include <benchmark/benchmark.h>

#include "ccenum/aniso.hpp"
#include "ccenum/krawczyk.hpp"

using namespace ccenum;

namespace {

AnisoProblem make_k3() {
  return AnisoProblem(std::vector<double>(3, 1.0 / 3), 0.75, 2.25);
}

// box around the paper-scale triangle solution
IntervalVector triangle_box(double h) {
  std::vector<double> mid = {0.6964, 0.0, -0.3482, 0.3467, -0.3482, -0.3467};
  IntervalVector box;
  for (double m : mid) box.push_back(Interval(m - h, m + h));
  return box;
}

void BM_interval_mul(benchmark::State& state) {
  Interval a(1.25, 1.2500001), b(-0.5, 0.75);
  for (auto _ : state) {
    Interval c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_interval_mul);

void BM_interval_inv_pow(benchmark::State& state) {
  Interval s(0.9, 1.1);
  for (auto _ : state) {
    Interval c = inv_pow_3_2(s);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_interval_inv_pow);

void BM_aniso_eval(benchmark::State& state) {
  AnisoProblem prob = make_k3();
  IntervalVector box = triangle_box(1e-3);
  IntervalVector f;
  for (auto _ : state) {
    prob.eval(box, f);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_aniso_eval);

void BM_aniso_jacobian(benchmark::State& state) {
  AnisoProblem prob = make_k3();
  IntervalVector box = triangle_box(1e-3);
  IntervalMatrix j;
  for (auto _ : state) {
    prob.jacobian(box, j);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_aniso_jacobian);

void BM_krawczyk_step(benchmark::State& state) {
  AnisoProblem prob = make_k3();
  IntervalVector box = triangle_box(1e-3);
  for (auto _ : state) {
    KrawczykOutcome o = krawczyk_step(prob, box);
    benchmark::DoNotOptimize(o);
  }
}
BENCHMARK(BM_krawczyk_step);

}  // namespace

BENCHMARK_MAIN();
