#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cvo/bvfunction.hpp"

namespace cvo {

// Symbolic description of a quadrature-type functional on [0,1]. Each
// spec owns an exact cumulative weight (make_weight) and a closed-form
// evaluation on polynomials (functional_value_exact); the two routes are
// independent and must agree.
struct FunctionalSpec {
  enum class Kind {
    Uniform,          // mean value of f
    Midpoint,         // f(1/2)
    Trapezoid,        // (f(0) + f(1)) / 2
    DoubleAverage,    // average of f((s+t)/2) over the unit square
    SimpsonLike,      // f(0)/6 + 2 f(1/2)/3 + f(1)/6
    CompositeQuarter, // quarter-point second-antiderivative rule
    T,                // (1-a/2) mean + second-difference correction, parameter a
    EvalAt,           // f(1-alpha)
    Endpoints,        // alpha f(0) + (1-alpha) f(1)
    S1,               // three-term antiderivative rule at alpha
    S2,               // two-term antiderivative + first-moment rule at alpha
    Mixture,          // convex combination of other specs
  };

  Kind kind = Kind::Uniform;
  Rational param = Rational(0);
  std::vector<std::pair<Rational, FunctionalSpec>> terms;

  static FunctionalSpec uniform() { return {Kind::Uniform, Rational(0), {}}; }
  static FunctionalSpec midpoint() { return {Kind::Midpoint, Rational(0), {}}; }
  static FunctionalSpec trapezoid() { return {Kind::Trapezoid, Rational(0), {}}; }
  static FunctionalSpec double_average() { return {Kind::DoubleAverage, Rational(0), {}}; }
  static FunctionalSpec simpson_like() { return {Kind::SimpsonLike, Rational(0), {}}; }
  static FunctionalSpec composite_quarter() { return {Kind::CompositeQuarter, Rational(0), {}}; }
  static FunctionalSpec t_family(const Rational& a) { return {Kind::T, a, {}}; }
  static FunctionalSpec eval_at(const Rational& alpha) { return {Kind::EvalAt, alpha, {}}; }
  static FunctionalSpec endpoints(const Rational& alpha) { return {Kind::Endpoints, alpha, {}}; }
  static FunctionalSpec s1(const Rational& alpha) { return {Kind::S1, alpha, {}}; }
  static FunctionalSpec s2(const Rational& alpha) { return {Kind::S2, alpha, {}}; }
  static FunctionalSpec mixture(std::vector<std::pair<Rational, FunctionalSpec>> terms) {
    return {Kind::Mixture, Rational(0), std::move(terms)};
  }

  // Throws InvalidParameterError when parameters are out of range
  // (S1 needs alpha in (0,1); EvalAt/Endpoints/S2 need alpha in [0,1];
  // mixture coefficients must sum to 1).
  void validate() const;

  bool operator==(const FunctionalSpec&) const = default;

  // Compact grammar: "uniform", "mid", "trap", "davg", "simpson",
  // "quarter", "T:a=6", "evalat:alpha=1/4", "endpoints:alpha=1/4",
  // "S1:alpha=1/4", "S2:alpha=1/3", "mix:3/4*davg+1/4*trap".
  std::string to_string() const;
  static FunctionalSpec parse(const std::string& text);
};

// The exact cumulative weight of the functional: integrating f against it
// reproduces the functional on [0,1].
CumulativeFunction make_weight(const FunctionalSpec& spec);

// Closed-form value on a polynomial, computed through exact
// antiderivatives, independent of the Stieltjes route.
Rational functional_value_exact(const FunctionalSpec& spec, const Poly& f);

}  // namespace cvo
