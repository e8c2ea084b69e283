#include "doctest.h"

#include "cvo/harness.hpp"
#include "cvo/kernels.hpp"

using namespace cvo;

namespace {
CumulativeFunction W(const char* s) {
  return make_weight(FunctionalSpec::parse(s));
}
}  // namespace

TEST_CASE("hinge_gap_grid: parallel equals serial, exactly") {
  CumulativeFunction F1 = W("T:a=1"), F2 = W("uniform");
  auto serial = hinge_gap_grid(F1, F2, 997, ExecutionMode::Serial);
  auto parallel = hinge_gap_grid(F1, F2, 997, ExecutionMode::Parallel);
  REQUIRE(serial.size() == 997);
  CHECK(serial == parallel);
  // T:a=1 <= uniform, so every hinge gap is nonnegative
  for (const Rational& g : serial) CHECK(sgn(g) >= 0);
}

TEST_CASE("hinge_gap_grid rejects unnormalized pairs") {
  CHECK_THROWS_AS(hinge_gap_grid(W("evalat:alpha=1/4"), W("uniform"), 10),
                  NotNormalizedError);
}

TEST_CASE("sample_primitive_gap: parallel equals serial bitwise") {
  CumulativeFunction F1 = W("T:a=4"), F2 = W("mid");
  auto serial = sample_primitive_gap(F1, F2, 1024, ExecutionMode::Serial);
  auto parallel = sample_primitive_gap(F1, F2, 1024, ExecutionMode::Parallel);
  CHECK(serial == parallel);
  REQUIRE(serial.size() == 1024);
  CHECK(serial.front() == 0.0);
  CHECK(serial.back() == 0.0);  // equal means
}

TEST_CASE("numeric_gap_batch: parallel equals serial bitwise") {
  CumulativeFunction F1 = W("mid"), F2 = W("uniform");
  std::vector<TestFunction> fs;
  for (uint64_t seed = 0; seed < 32; ++seed)
    fs.push_back(random_convex(seed, 4));
  auto serial = numeric_gap_batch(F1, F2, fs, 1e-12, ExecutionMode::Serial);
  auto parallel = numeric_gap_batch(F1, F2, fs, 1e-12, ExecutionMode::Parallel);
  CHECK(serial == parallel);
  // mid <= uniform: gaps stay above the numeric floor
  for (double g : serial) CHECK(g >= -1e-12);
}

TEST_CASE("compare_sweep: parallel equals serial") {
  std::vector<std::pair<FunctionalSpec, FunctionalSpec>> pairs;
  for (long a = -10; a <= 10; ++a) {
    pairs.emplace_back(FunctionalSpec::t_family(Rational(a)),
                       FunctionalSpec::midpoint());
    pairs.emplace_back(FunctionalSpec::t_family(Rational(a)),
                       FunctionalSpec::uniform());
  }
  auto serial = compare_sweep(pairs, ExecutionMode::Serial);
  auto parallel = compare_sweep(pairs, ExecutionMode::Parallel);
  REQUIRE(serial.size() == pairs.size());
  CHECK(serial == parallel);
}
