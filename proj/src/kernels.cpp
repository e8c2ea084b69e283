#include "cvo/kernels.hpp"

namespace cvo {

std::vector<Rational> hinge_gap_grid(const CumulativeFunction& F1,
                                     const CumulativeFunction& F2, int n,
                                     ExecutionMode mode) {
  if (n <= 0) throw PreconditionError("hinge_gap_grid: n must be positive");
  if (F1.total_mass() != F2.total_mass())
    throw NotNormalizedError("hinge_gap_grid: endpoint masses differ");
  PiecewiseFunction G =
      primitive(linear_combination({{Rational(1), F2}, {Rational(-1), F1}}));
  if (G(Rational(1)) != 0)
    throw NotNormalizedError("hinge_gap_grid: means differ");

  std::vector<Rational> out(n);
  if (mode == ExecutionMode::Serial) {
    for (int i = 0; i < n; ++i) out[i] = G(rat(i + 1, n + 1));
  } else {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) out[i] = G(rat(i + 1, n + 1));
  }
  return out;
}

std::vector<double> sample_primitive_gap(const CumulativeFunction& F1,
                                         const CumulativeFunction& F2,
                                         int points, ExecutionMode mode) {
  if (points < 2) throw PreconditionError("sample_primitive_gap: need >= 2 points");
  PiecewiseFunction G =
      primitive(linear_combination({{Rational(1), F2}, {Rational(-1), F1}}));
  std::vector<double> out(points);
  if (mode == ExecutionMode::Serial) {
    for (int i = 0; i < points; ++i)
      out[i] = to_double(G(rat(i, points - 1)));
  } else {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < points; ++i)
      out[i] = to_double(G(rat(i, points - 1)));
  }
  return out;
}

std::vector<double> numeric_gap_batch(const CumulativeFunction& F1,
                                      const CumulativeFunction& F2,
                                      const std::vector<TestFunction>& fs,
                                      double tol, ExecutionMode mode) {
  int n = static_cast<int>(fs.size());
  std::vector<double> out(n);
  auto gap = [&](int i) {
    return stieltjes_numeric(fs[i], F2, tol).value -
           stieltjes_numeric(fs[i], F1, tol).value;
  };
  if (mode == ExecutionMode::Serial) {
    for (int i = 0; i < n; ++i) out[i] = gap(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) out[i] = gap(i);
  }
  return out;
}

std::vector<Verdict> compare_sweep(
    const std::vector<std::pair<FunctionalSpec, FunctionalSpec>>& pairs,
    ExecutionMode mode) {
  int n = static_cast<int>(pairs.size());
  std::vector<Verdict> out(n);
  auto one = [&](int i) {
    return levin_stechkin_compare(make_weight(pairs[i].first),
                                  make_weight(pairs[i].second));
  };
  if (mode == ExecutionMode::Serial) {
    for (int i = 0; i < n; ++i) out[i] = one(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) out[i] = one(i);
  }
  return out;
}

}  // namespace cvo
