#pragma once

#include <gmpxx.h>

#include <string>

namespace cvo {

// Exact arbitrary-precision rational, always canonical (lowest terms,
// positive denominator). GMP's mpq_class maintains both invariants.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign_of(const Rational& x) { return sgn(x); }

inline double to_double(const Rational& x) { return x.get_d(); }

// Canonical text form: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Integer floor_int(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline Rational abs_rat(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Accepts "p/q", plain integers, and decimal/scientific literals such as
// "0.25" or "1e-9", all converted exactly.
Rational parse_rational(const std::string& text);

// The unique rational with the smallest denominator (then smallest
// numerator) strictly inside (lo, hi). Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace cvo
