#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvo/errors.hpp"
#include "cvo/rational.hpp"

namespace cvo {

// Univariate polynomial with exact rational coefficients, lowest degree
// first. The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Rational& v) { return Poly({v}); }
  static Poly monomial(int degree, const Rational& coeff = Rational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  double eval_double(double t) const;

  Poly derivative() const;
  Poly antiderivative() const;  // primitive vanishing at 0

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, Poly p);

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder over the rationals; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// p with repeated factors collapsed: p / gcd(p, p'). Same roots as p,
// all simple.
Poly squarefree_part(const Poly& p);

// Exact division by (t - r); r must be a root.
Poly deflate_root(const Poly& p, const Rational& r);

// Closed interval containing exactly one real root; degenerate ([r, r])
// when the root is rational.
struct RootInterval {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

// Isolating intervals for every distinct real root of p in [lo, hi],
// sorted. Intervals are pairwise disjoint, contain exactly one root of p
// each, and non-degenerate ones bracket a sign change of the squarefree
// part, so bisection refines them indefinitely. Rational roots are
// detected exactly (rational root theorem on the integer-scaled
// squarefree part) and returned degenerate. Throws ZeroPolynomialError
// for p = 0.
std::vector<RootInterval> isolate_roots(const Poly& p, const Rational& lo,
                                        const Rational& hi);

// Shrink an isolating interval by `steps` bisections. The contained root
// never leaves the interval.
RootInterval refine_root(const Poly& p, RootInterval iv, int steps);

enum class IntervalSign { Nonnegative, Nonpositive, IdenticallyZero, Mixed };

// Exact sign classification of p on [lo, hi]; isolated zeros do not make
// a one-signed polynomial Mixed.
IntervalSign sign_on_interval(const Poly& p, const Rational& lo,
                              const Rational& hi);

// Maximal open subintervals of (lo, hi) on which p keeps a constant
// nonzero sign, reported through their certain extents (root isolating
// intervals trimmed away). Empty when p vanishes identically.
struct SignRegion {
  Rational lo, hi;  // open extent, lo < hi
  int sign;         // +1 or -1
};
std::vector<SignRegion> sign_regions(const Poly& p, const Rational& lo,
                                     const Rational& hi);

// A rational point in (lo, hi) where p has the requested strict sign,
// if one exists. want is +1 or -1.
std::optional<Rational> find_point_with_sign(const Poly& p, const Rational& lo,
                                             const Rational& hi, int want);

}  // namespace cvo
