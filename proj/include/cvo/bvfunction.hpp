#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cvo/poly.hpp"

namespace cvo {

struct Atom {
  Rational location;
  Rational mass;
  bool operator==(const Atom&) const = default;
};

// Continuous piecewise polynomial on [0,1]; the primitive of a
// CumulativeFunction.
class PiecewiseFunction {
 public:
  PiecewiseFunction(std::vector<Rational> breakpoints, std::vector<Poly> pieces);

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  size_t piece_count() const { return pieces_.size(); }

  Rational operator()(const Rational& t) const;
  double eval_double(double t) const;

 private:
  std::vector<Rational> breaks_;
  std::vector<Poly> pieces_;
};

// Bounded-variation weight on [0,1]: polynomial pieces on the open
// intervals between breakpoints plus jump atoms. The function value is 0
// at t=0; an atom at 0 is the jump immediately to the right of 0, an atom
// at 1 is the jump at the right endpoint (included in the value at 1).
// Atom masses must match the one-sided limits of the pieces; the
// constructor enforces that and canonicalizes (adjacent equal pieces with
// no atom between them are merged, zero-mass atoms dropped).
class CumulativeFunction {
 public:
  enum class Side { Left, Right };

  CumulativeFunction(std::vector<Rational> breakpoints, std::vector<Poly> pieces,
                     std::vector<Atom> atoms);

  static CumulativeFunction zero();

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  // One-sided limit at t. Left at 0 is 0; Right at 1 includes the atom
  // at 1 (the full endpoint value). Throws OutOfDomainError outside [0,1].
  Rational value(const Rational& t, Side side) const;

  Rational total_mass() const { return value(Rational(1), Side::Right); }
  Rational atom_mass_at(const Rational& loc) const;

  bool operator==(const CumulativeFunction& o) const = default;

  std::string to_json() const;
  static CumulativeFunction from_json(const std::string& text);

 private:
  void validate_and_canonicalize();
  std::vector<Rational> breaks_;
  std::vector<Poly> pieces_;
  std::vector<Atom> atoms_;
};

// Pointwise sum of coeff * F over the terms; breakpoints merged, atom
// masses combined by location.
CumulativeFunction linear_combination(
    const std::vector<std::pair<Rational, CumulativeFunction>>& terms);

// G(x) = integral of F over [0, x]; continuous, G(0) = 0.
PiecewiseFunction primitive(const CumulativeFunction& F);

// Exact k-th moment of the induced measure dF.
Rational moment(const CumulativeFunction& F, int k);

// Exact Stieltjes integral of a polynomial against dF.
Rational stieltjes_poly(const CumulativeFunction& F, const Poly& f);

// A sign change of F1 - F2 inside (0,1): the change is located within
// [lo, hi] (degenerate when the location is known exactly), with the
// signs on either side. Tangencies are not crossings.
struct Crossing {
  Rational lo, hi;
  int sign_before, sign_after;
};
std::vector<Crossing> crossing_points(const CumulativeFunction& F1,
                                      const CumulativeFunction& F2);

// Nondecreasing, nonnegative jumps, total mass 1.
bool is_cdf(const CumulativeFunction& F);

}  // namespace cvo
