#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cvo/catalog.hpp"

namespace cvo {

// Scalar test function with known kink locations so adaptive integration
// can split there. Evaluatable on all of R (reparameterizations move the
// domain around).
struct TestFunction {
  enum class Kind { Hinge, Power, Exponential, PiecewiseLinearConvex, Affine, Polynomial, Reparam };

  Kind kind = Kind::Affine;
  std::function<double(double)> eval;
  std::vector<double> kinks;

  double operator()(double t) const { return eval(t); }

  static TestFunction hinge(double c);
  static TestFunction power(int p);
  static TestFunction exponential(double lambda);
  // Convex piecewise-linear: knots strictly increasing in (0,1), slopes
  // nondecreasing, one more slope than knots. Throws InvalidParameterError
  // when either invariant fails.
  static TestFunction piecewise_linear_convex(std::vector<double> knots,
                                              std::vector<double> slopes,
                                              double value_at_0);
  static TestFunction affine(double beta, double delta);
  static TestFunction from_poly(const Poly& p);

  // phi(t) = f(x + t (y - x)); kinks are mapped into the new coordinates.
  TestFunction reparameterized(double x, double y) const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

// Adaptive Gauss-Kronrod (7-15) with the integrand's kinks as initial
// split points. Throws ToleranceNotMetError when the subdivision budget
// runs out before the requested absolute tolerance is met.
QuadratureResult integrate(const TestFunction& f, double lo, double hi,
                           double tol = 1e-12);

// Numeric Stieltjes integral of f against dF: the absolutely continuous
// part integrates f times the piece derivatives, atoms contribute
// f(location) * mass exactly.
QuadratureResult stieltjes_numeric(const TestFunction& f,
                                   const CumulativeFunction& F,
                                   double tol = 1e-12);

enum class DoubleAverageMode {
  TentWeight,  // collapse to a 1-D integral against the triangular density
  Tensor,      // nested 2-D adaptive evaluation
};

// Average of f((s+t)/2) over [x,y]^2, normalized by (y-x)^2; computed
// without any antiderivative of f.
QuadratureResult double_average_direct(const TestFunction& f, double x,
                                       double y, double tol = 1e-12,
                                       DoubleAverageMode mode = DoubleAverageMode::TentWeight);

struct FunctionalNumeric {
  QuadratureResult primary;
  // For the T family only: the same value recomputed from numerically
  // antidifferentiated F and Phi, as an independent diagnostic.
  std::optional<double> secondary;
};

// Functional value on a general interval [x,y]: normalize with
// phi(t) = f(x + t(y-x)) and integrate against the spec's weight.
FunctionalNumeric functional_numeric(const FunctionalSpec& spec,
                                     const TestFunction& f, double x, double y,
                                     double tol = 1e-12);

// Second antiderivative of f vanishing (with its derivative) at `base`,
// evaluated at t by two nested adaptive integrations.
double second_antiderivative(const TestFunction& f, double base, double t,
                             double tol);

// Deterministic convex piecewise-linear sample: knots uniform then sorted,
// slopes sorted ascending.
TestFunction random_convex(uint64_t seed, int knot_count);

}  // namespace cvo
