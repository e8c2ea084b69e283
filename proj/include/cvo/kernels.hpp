#pragma once

#include <utility>
#include <vector>

#include "cvo/convex_order.hpp"
#include "cvo/quadrature.hpp"

namespace cvo {

// The grid and batch evaluations below are embarrassingly parallel; each
// has an OpenMP path and a serial reference path that must produce
// identical output (exact rationals, or bitwise-equal doubles).
enum class ExecutionMode { Serial, Parallel };

// Exact hinge gaps G(i/(n+1)) for i = 1..n, where G is the primitive of
// F2 - F1. Requires matching endpoint masses and means.
std::vector<Rational> hinge_gap_grid(const CumulativeFunction& F1,
                                     const CumulativeFunction& F2, int n,
                                     ExecutionMode mode = ExecutionMode::Parallel);

// G sampled at `points` equally spaced locations spanning [0,1], as
// doubles (plot data).
std::vector<double> sample_primitive_gap(const CumulativeFunction& F1,
                                         const CumulativeFunction& F2,
                                         int points,
                                         ExecutionMode mode = ExecutionMode::Parallel);

// Numeric functional gaps: for each test function f, the value of
// int f dF2 - int f dF1 by adaptive quadrature.
std::vector<double> numeric_gap_batch(const CumulativeFunction& F1,
                                      const CumulativeFunction& F2,
                                      const std::vector<TestFunction>& fs,
                                      double tol,
                                      ExecutionMode mode = ExecutionMode::Parallel);

// Exact verdicts for a batch of weight pairs (parameter sweeps).
std::vector<Verdict> compare_sweep(
    const std::vector<std::pair<FunctionalSpec, FunctionalSpec>>& pairs,
    ExecutionMode mode = ExecutionMode::Parallel);

}  // namespace cvo
