// Serial vs OpenMP timings for the batch kernels.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cvo/harness.hpp"
#include "cvo/kernels.hpp"

using namespace cvo;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    CumulativeFunction F1 = make_weight(FunctionalSpec::t_family(Rational(1)));
    CumulativeFunction F2 = make_weight(FunctionalSpec::uniform());
    std::vector<Rational> a, b;
    double s = time_ms([&] { a = hinge_gap_grid(F1, F2, 20011, ExecutionMode::Serial); });
    double p = time_ms([&] { b = hinge_gap_grid(F1, F2, 20011, ExecutionMode::Parallel); });
    if (a != b) std::printf("MISMATCH in hinge_gap_grid\n");
    row("hinge_gap_grid n=20011", s, p);
  }

  {
    CumulativeFunction F1 = make_weight(FunctionalSpec::t_family(Rational(4)));
    CumulativeFunction F2 = make_weight(FunctionalSpec::midpoint());
    std::vector<double> a, b;
    double s = time_ms(
        [&] { a = sample_primitive_gap(F1, F2, 1 << 20, ExecutionMode::Serial); });
    double p = time_ms(
        [&] { b = sample_primitive_gap(F1, F2, 1 << 20, ExecutionMode::Parallel); });
    if (a != b) std::printf("MISMATCH in sample_primitive_gap\n");
    row("sample_primitive_gap 2^20", s, p);
  }

  {
    CumulativeFunction F1 = make_weight(FunctionalSpec::midpoint());
    CumulativeFunction F2 = make_weight(FunctionalSpec::uniform());
    std::vector<TestFunction> fs;
    for (uint64_t seed = 0; seed < 512; ++seed)
      fs.push_back(random_convex(seed, 8));
    std::vector<double> a, b;
    double s = time_ms(
        [&] { a = numeric_gap_batch(F1, F2, fs, 1e-12, ExecutionMode::Serial); });
    double p = time_ms(
        [&] { b = numeric_gap_batch(F1, F2, fs, 1e-12, ExecutionMode::Parallel); });
    if (a != b) std::printf("MISMATCH in numeric_gap_batch\n");
    row("numeric_gap_batch 512 fns", s, p);
  }

  {
    std::vector<std::pair<FunctionalSpec, FunctionalSpec>> pairs;
    for (int i = 0; i <= 400; ++i) {
      Rational param = rat(-10, 1) + rat(i, 20);  // -10 .. 10 in steps of 1/20
      pairs.emplace_back(FunctionalSpec::t_family(param),
                         FunctionalSpec::midpoint());
      pairs.emplace_back(FunctionalSpec::t_family(param),
                         FunctionalSpec::trapezoid());
    }
    std::vector<Verdict> a, b;
    double s = time_ms([&] { a = compare_sweep(pairs, ExecutionMode::Serial); });
    double p = time_ms([&] { b = compare_sweep(pairs, ExecutionMode::Parallel); });
    if (a != b) std::printf("MISMATCH in compare_sweep\n");
    row("compare_sweep 802 verdicts", s, p);
  }

  return 0;
}
