#include "cvo/rational.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>

namespace cvo {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (text.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + text);
    if (r.get_den() == 0)
      throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
  }

  // Decimal / scientific form: sign, digits, optional fraction, optional
  // exponent. Everything is converted exactly.
  size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      break;
    } else {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }
  long exp10 = 0;
  if (i < text.size()) {
    ++i;  // skip 'e'
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i == text.size())
      throw std::invalid_argument("bad exponent: " + text);
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad exponent: " + text);
      exp10 = exp10 * 10 + (text[i] - '0');
    }
    if (eneg) exp10 = -exp10;
  }
  if (!seen_digit) throw std::invalid_argument("bad rational literal: " + text);

  Integer num(digits.empty() ? "0" : digits, 10);
  if (neg) num = -num;
  long shift = exp10 - frac_digits;
  Integer pow10 = 1;
  Integer ten = 10;
  mpz_pow_ui(pow10.get_mpz_t(), ten.get_mpz_t(),
             static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r;
  if (shift >= 0)
    r = Rational(num * pow10);
  else
    r = Rational(num, pow10);
  r.canonicalize();
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  assert(lo < hi);
  Integer fl = floor_int(lo);
  Rational next_int(fl + 1);
  if (next_int < hi) return next_int;  // an integer lies strictly inside

  // Shift into [0,1): (lo,hi) contains no integer now.
  Rational a = lo - Rational(fl);
  Rational b = hi - Rational(fl);
  if (sgn(a) == 0) {
    // (0, b): the smallest denominator is floor(1/b)+1 with numerator 1.
    Integer q = floor_int(Rational(1) / b) + 1;
    return Rational(fl) + Rational(1, q);
  }
  Rational inner = simplest_between(Rational(1) / b, Rational(1) / a);
  return Rational(fl) + Rational(1) / inner;
}

}  // namespace cvo
