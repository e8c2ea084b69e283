#include "cvo/poly.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace cvo {

namespace {

constexpr int kWidthRefineSteps = 20;  // isolating intervals end up 2^-20 of the domain

}  // namespace

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::monomial(int degree, const Rational& coeff) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return Poly(std::move(c));
}

Rational Poly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Poly::eval_double(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
  if (c_.empty()) return Poly();
  std::vector<Rational> a(c_.size() + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    a[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
  return Poly(std::move(a));
}

Poly Poly::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Poly(std::move(c));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, Poly p) {
  for (auto& c : p.c_) c *= s;
  p.trim();
  return p;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (sgn(c_[i]) == 0) continue;
    if (!out.empty()) out += sgn(c_[i]) > 0 ? " + " : " - ";
    else if (sgn(c_[i]) < 0) out += "-";
    Rational a = abs_rat(c_[i]);
    bool unit = (a == 1);
    if (i == 0 || !unit) out += cvo::to_string(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroPolynomialError("divmod: zero divisor");
  std::vector<Rational> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
  const Rational& lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    Rational f = rem[i] / lead;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.leading() != 1) a = (Rational(1) / a.leading()) * a;
  return a;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 1) return p;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divmod(p, g).first;
}

Poly deflate_root(const Poly& p, const Rational& r) {
  int n = p.degree();
  assert(n >= 1);
  std::vector<Rational> b(n, Rational(0));
  b[n - 1] = p.coeff(n);
  for (int i = n - 1; i >= 1; --i) b[i - 1] = p.coeff(i) + r * b[i];
  assert(sgn(p.coeff(0) + r * b[0]) == 0 && "deflate_root: not a root");
  return Poly(std::move(b));
}

namespace {

std::vector<Poly> sturm_chain(const Poly& q) {
  std::vector<Poly> chain{q, q.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() >= 1) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const Poly& s : chain) {
    int sg = sgn(s(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++count;
    prev = sg;
  }
  return count;
}

// All positive divisors when |n| is small enough to factor quickly.
std::optional<std::vector<unsigned long>> small_divisors(const Integer& n_in) {
  Integer n = abs(n_in);
  static const Integer kGuard("1000000000000");
  if (n == 0 || n > kGuard) return std::nullopt;
  unsigned long v = n.get_ui();
  std::vector<unsigned long> divs;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d != v / d) divs.push_back(v / d);
    }
  }
  return divs;
}

// Strip every rational root of q (squarefree), appending them to `found`.
// May leave rational roots behind when coefficients are too large to
// factor; callers treat that as "roots may still appear during bisection".
Poly extract_rational_roots(Poly q, std::vector<Rational>& found) {
  while (q.degree() >= 1 && sgn(q.coeff(0)) == 0) {
    found.push_back(Rational(0));
    q = deflate_root(q, Rational(0));
  }
  bool progress = true;
  while (progress && q.degree() >= 1) {
    progress = false;
    if (q.degree() == 1) {
      found.push_back(-q.coeff(0) / q.coeff(1));
      return Poly();
    }
    // Scale to an integer polynomial for the rational root theorem.
    Integer den_lcm = 1;
    for (const Rational& c : q.coeffs())
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ic(q.coeffs().size());
    Integer content = 0;
    for (size_t i = 0; i < ic.size(); ++i) {
      Rational scaled = q.coeff(static_cast<int>(i)) * Rational(den_lcm);
      ic[i] = scaled.get_num();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ic[i].get_mpz_t());
    }
    if (content > 1)
      for (auto& c : ic) c /= content;
    auto d0 = small_divisors(ic.front());
    auto dl = small_divisors(ic.back());
    if (!d0 || !dl) return q;  // coefficients too large; give up on exactness
    std::set<Rational> candidates;
    for (unsigned long p : *d0)
      for (unsigned long s : *dl) {
        Rational c(static_cast<long>(p), static_cast<long>(s));
        c.canonicalize();
        candidates.insert(c);
        candidates.insert(-c);
      }
    for (const Rational& c : candidates) {
      if (sgn(q(c)) == 0) {
        found.push_back(c);
        q = deflate_root(q, c);
        progress = true;
        break;
      }
    }
  }
  return q;
}

// One bisection step on an isolating interval of a simple root of q
// (q changes sign across it). Returns false when the midpoint is a root,
// in which case *exact_hit is set.
bool bisect_step(const Poly& q, Rational& a, Rational& b, Rational* exact_hit) {
  Rational m = (a + b) / 2;
  int sm = sgn(q(m));
  if (sm == 0) {
    if (exact_hit) *exact_hit = m;
    return false;
  }
  if (sm == sgn(q(a)))
    a = m;
  else
    b = m;
  return true;
}

}  // namespace

std::vector<RootInterval> isolate_roots(const Poly& p, const Rational& lo,
                                        const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomialError("isolate_roots: zero polynomial");
  if (lo > hi) throw PreconditionError("isolate_roots: lo > hi");
  std::vector<RootInterval> out;
  if (lo == hi) {
    if (sgn(p(lo)) == 0) out.push_back({lo, lo});
    return out;
  }

  Poly q = squarefree_part(p);
  if (q.degree() <= 0) return out;

  std::vector<Rational> exact;
  q = extract_rational_roots(q, exact);
  for (const Rational& r : exact)
    if (lo <= r && r <= hi) out.push_back({r, r});

  std::vector<RootInterval> pending;
  if (q.degree() >= 1) {
    // Defensive: extract_rational_roots may have bailed on large
    // coefficients, so endpoints could still be roots.
    while (q.degree() >= 1 && sgn(q(lo)) == 0) {
      out.push_back({lo, lo});
      exact.push_back(lo);
      q = deflate_root(q, lo);
    }
    while (q.degree() >= 1 && sgn(q(hi)) == 0) {
      out.push_back({hi, hi});
      exact.push_back(hi);
      q = deflate_root(q, hi);
    }
  }
  if (q.degree() >= 1) {
    std::vector<Poly> chain = sturm_chain(q);
    std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      int n = sign_variations(chain, a) - sign_variations(chain, b);
      if (n <= 0) continue;
      if (n == 1) {
        pending.push_back({a, b});
        continue;
      }
      Rational m = (a + b) / 2;
      if (sgn(q(m)) == 0) {
        out.push_back({m, m});
        exact.push_back(m);
        q = deflate_root(q, m);
        if (q.degree() >= 1) {
          chain = sturm_chain(q);
          stack.push_back({a, m});
          stack.push_back({m, b});
        } else {
          stack.clear();
        }
        continue;
      }
      stack.push_back({a, m});
      stack.push_back({m, b});
    }
  }

  // Tighten: fixed width target, then exclusion of the exact roots, then
  // strict separation between neighbouring intervals. All loops end
  // because the enclosed roots are distinct reals.
  Rational width_target = hi - lo;
  for (int i = 0; i < kWidthRefineSteps; ++i) width_target /= 2;
  for (auto& iv : pending) {
    Rational ehit;
    while (iv.hi - iv.lo > width_target) {
      if (!bisect_step(q, iv.lo, iv.hi, &ehit)) {
        iv.lo = iv.hi = ehit;
        break;
      }
    }
    if (!iv.exact()) {
      for (const Rational& r : exact) {
        while (iv.lo <= r && r <= iv.hi) {
          if (!bisect_step(q, iv.lo, iv.hi, &ehit)) {
            iv.lo = iv.hi = ehit;
            break;
          }
        }
      }
    }
  }

  out.insert(out.end(), pending.begin(), pending.end());
  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) {
              return x.lo < y.lo;
            });
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    Rational ehit;
    while (!out[i + 1].exact() && out[i].hi >= out[i + 1].lo) {
      if (!bisect_step(q, out[i + 1].lo, out[i + 1].hi, &ehit)) {
        out[i + 1].lo = out[i + 1].hi = ehit;
        break;
      }
    }
    while (!out[i].exact() && out[i].hi >= out[i + 1].lo) {
      if (!bisect_step(q, out[i].lo, out[i].hi, &ehit)) {
        out[i].lo = out[i].hi = ehit;
        break;
      }
    }
  }
  return out;
}

RootInterval refine_root(const Poly& p, RootInterval iv, int steps) {
  if (iv.exact()) return iv;
  Poly q = squarefree_part(p);
  Rational ehit;
  for (int i = 0; i < steps && !iv.exact(); ++i) {
    if (!bisect_step(q, iv.lo, iv.hi, &ehit)) {
      iv.lo = iv.hi = ehit;
    }
  }
  return iv;
}

std::vector<SignRegion> sign_regions(const Poly& p, const Rational& lo,
                                     const Rational& hi) {
  std::vector<SignRegion> regions;
  if (p.is_zero() || lo >= hi) return regions;
  std::vector<RootInterval> roots = isolate_roots(p, lo, hi);

  auto emit = [&](const Rational& u, const Rational& v) {
    if (u < v) {
      int s = sgn(p((u + v) / 2));
      assert(s != 0);
      regions.push_back({u, v, s});
    } else {  // degenerate extent at a domain endpoint
      int s = sgn(p(u));
      if (s != 0) regions.push_back({u, u, s});
    }
  };

  if (roots.empty()) {
    emit(lo, hi);
    return regions;
  }
  emit(lo, roots.front().lo);
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    emit(roots[i].hi, roots[i + 1].lo);
  emit(roots.back().hi, hi);
  return regions;
}

IntervalSign sign_on_interval(const Poly& p, const Rational& lo,
                              const Rational& hi) {
  if (lo > hi) throw PreconditionError("sign_on_interval: lo > hi");
  if (p.is_zero()) return IntervalSign::IdenticallyZero;
  if (lo == hi) {
    int s = sgn(p(lo));
    if (s == 0) return IntervalSign::IdenticallyZero;
    return s > 0 ? IntervalSign::Nonnegative : IntervalSign::Nonpositive;
  }
  bool pos = false, neg = false;
  for (const SignRegion& r : sign_regions(p, lo, hi))
    (r.sign > 0 ? pos : neg) = true;
  if (pos && neg) return IntervalSign::Mixed;
  if (pos) return IntervalSign::Nonnegative;
  if (neg) return IntervalSign::Nonpositive;
  return IntervalSign::IdenticallyZero;  // unreachable for nonzero p
}

std::optional<Rational> find_point_with_sign(const Poly& p, const Rational& lo,
                                             const Rational& hi, int want) {
  if (p.is_zero() || lo >= hi) return std::nullopt;
  for (const SignRegion& r : sign_regions(p, lo, hi)) {
    if (r.sign != want) continue;
    if (r.lo < r.hi) return (r.lo + r.hi) / 2;
    // Degenerate extent at a boundary: step inward until the sign shows.
    Rational step = (hi - lo) / 4;
    for (int i = 0; i < 64; ++i) {
      Rational x = r.lo == lo ? Rational(lo + step) : Rational(hi - step);
      if (lo < x && x < hi && sgn(p(x)) == want) return x;
      step /= 2;
    }
  }
  return std::nullopt;
}

}  // namespace cvo
