#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cvo/bvfunction.hpp"

namespace cvo {

// Outcome of comparing the functionals f -> integral of f dF1 and
// f -> integral of f dF2 over all continuous convex f on [0,1].
enum class Relation {
  LessOrEqual,     // gap functional of F2 - F1 is nonnegative on convex f
  GreaterOrEqual,
  Equal,
  Incomparable,
  NotNormalized,   // endpoint masses or means differ: affine functions already separate them
};

enum class GapSign { Nonnegative, Nonpositive, Zero, Mixed };

// Witness locations for an Incomparable verdict: G(plus_location) > 0 and
// G(minus_location) < 0 where G is the primitive of F2 - F1.
struct Witnesses {
  Rational plus_location;
  Rational minus_location;
  Rational plus_gap;   // exact G(plus_location)
  Rational minus_gap;  // exact G(minus_location)
  bool operator==(const Witnesses&) const = default;
};

struct Verdict {
  Relation relation = Relation::NotNormalized;
  bool endpoint_check = false;  // F1(1) == F2(1)
  bool mean_check = false;      // equal integrals of F1, F2 over [0,1]
  GapSign gap_sign = GapSign::Mixed;
  std::optional<Witnesses> witnesses;  // present iff Incomparable
  bool operator==(const Verdict&) const = default;
};

std::string to_string(Relation r);
std::string to_string(GapSign g);

// Exact decision of the convex-order relation between two weights: equal
// endpoint values, equal means, and a one-signed primitive gap
// G(x) = integral over [0,x] of (F2 - F1). Isolated zeros of G do not
// break comparability. A failed endpoint or mean check yields
// NotNormalized rather than an order.
Verdict levin_stechkin_compare(const CumulativeFunction& F1,
                               const CumulativeFunction& F2);

enum class Direction { FirstLeSecond, SecondLeFirst };

// Single-crossing comparison for equal-mean CDFs. Returns the direction
// when F1 - F2 changes sign exactly once, nothing otherwise. Throws
// PreconditionError unless both inputs are CDFs with equal first moments.
std::optional<Direction> ohlin_compare(const CumulativeFunction& F1,
                                       const CumulativeFunction& F2);

// Exact value of  int max(t-c,0) dF2 - int max(t-c,0) dF1, which equals
// G(c). Requires 0 < c < 1 and passing endpoint/mean checks
// (NotNormalizedError otherwise).
Rational hinge_gap(const CumulativeFunction& F1, const CumulativeFunction& F2,
                   const Rational& c);

// Convex function t -> max(t - knot, 0); the counterexample shape used to
// certify incomparability.
struct HingeWitness {
  Rational knot;
  double operator()(double t) const {
    double c = knot.get_d();
    return t > c ? t - c : 0.0;
  }
};

// The two hinges certifying an Incomparable verdict (Stieltjes gaps of
// strictly opposite sign). Throws NotIncomparableError otherwise.
std::pair<HingeWitness, HingeWitness> witness_functions(const Verdict& v);

}  // namespace cvo
