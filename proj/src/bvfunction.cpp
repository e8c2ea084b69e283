#include "cvo/bvfunction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace cvo {

PiecewiseFunction::PiecewiseFunction(std::vector<Rational> breakpoints,
                                     std::vector<Poly> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breaks_.size() < 2 || pieces_.size() != breaks_.size() - 1)
    throw InvalidParameterError("piecewise function: bad breakpoint/piece count");
  for (size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw InvalidParameterError("piecewise function: breakpoints not increasing");
  for (size_t i = 0; i + 1 < pieces_.size(); ++i)
    if (pieces_[i](breaks_[i + 1]) != pieces_[i + 1](breaks_[i + 1]))
      throw InvalidParameterError("piecewise function: discontinuous at breakpoint");
}

Rational PiecewiseFunction::operator()(const Rational& t) const {
  if (t < breaks_.front() || t > breaks_.back())
    throw OutOfDomainError("piecewise function: argument outside domain");
  size_t i = std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin();
  if (i > 0) --i;
  if (i >= pieces_.size()) i = pieces_.size() - 1;
  return pieces_[i](t);
}

double PiecewiseFunction::eval_double(double t) const {
  size_t i = 0;
  while (i + 1 < pieces_.size() && t > breaks_[i + 1].get_d()) ++i;
  return pieces_[i].eval_double(t);
}

CumulativeFunction::CumulativeFunction(std::vector<Rational> breakpoints,
                                       std::vector<Poly> pieces,
                                       std::vector<Atom> atoms)
    : breaks_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      atoms_(std::move(atoms)) {
  validate_and_canonicalize();
}

CumulativeFunction CumulativeFunction::zero() {
  return CumulativeFunction({Rational(0), Rational(1)}, {Poly()}, {});
}

void CumulativeFunction::validate_and_canonicalize() {
  if (breaks_.size() < 2 || pieces_.size() != breaks_.size() - 1)
    throw InvalidParameterError("cumulative function: bad breakpoint/piece count");
  if (breaks_.front() != 0 || breaks_.back() != 1)
    throw InvalidParameterError("cumulative function: domain must be [0,1]");
  for (size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw InvalidParameterError("cumulative function: breakpoints not increasing");

  // Merge atoms by location, drop zero masses.
  std::map<Rational, Rational> amap;
  for (const Atom& a : atoms_) {
    if (a.location < 0 || a.location > 1)
      throw InvalidParameterError("cumulative function: atom outside [0,1]");
    amap[a.location] += a.mass;
  }
  atoms_.clear();
  for (const auto& [loc, mass] : amap) {
    if (sgn(mass) == 0) continue;
    if (!std::binary_search(breaks_.begin(), breaks_.end(), loc))
      throw InvalidParameterError("cumulative function: atom not at a breakpoint");
    atoms_.push_back({loc, mass});
  }

  // Jump consistency: the declared atoms are exactly the one-sided limit
  // differences of the pieces (value at 0 is pinned to 0).
  if (pieces_.front()(Rational(0)) != atom_mass_at(Rational(0)))
    throw InvalidParameterError("cumulative function: jump at 0 does not match atom");
  for (size_t i = 1; i + 1 < breaks_.size(); ++i) {
    Rational jump = pieces_[i](breaks_[i]) - pieces_[i - 1](breaks_[i]);
    if (jump != atom_mass_at(breaks_[i]))
      throw InvalidParameterError("cumulative function: interior jump does not match atom");
  }

  // Canonical form: drop breakpoints separating identical pieces with no
  // atom in between.
  std::vector<Rational> nb{breaks_.front()};
  std::vector<Poly> np;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    bool merge = !np.empty() && np.back() == pieces_[i] &&
                 sgn(atom_mass_at(breaks_[i])) == 0;
    if (merge) continue;  // same piece continues across breaks_[i]
    if (i > 0) nb.push_back(breaks_[i]);
    np.push_back(pieces_[i]);
  }
  nb.push_back(breaks_.back());
  breaks_ = std::move(nb);
  pieces_ = std::move(np);
}

Rational CumulativeFunction::atom_mass_at(const Rational& loc) const {
  for (const Atom& a : atoms_)
    if (a.location == loc) return a.mass;
  return Rational(0);
}

Rational CumulativeFunction::value(const Rational& t, Side side) const {
  if (t < 0 || t > 1) throw OutOfDomainError("cumulative function: t outside [0,1]");
  if (t == 0) return side == Side::Left ? Rational(0) : pieces_.front()(t);
  if (t == 1) {
    Rational left = pieces_.back()(t);
    return side == Side::Left ? left : left + atom_mass_at(t);
  }
  size_t i = std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin();
  // breaks_[i-1] <= t < breaks_[i]
  if (breaks_[i - 1] == t && side == Side::Left) return pieces_[i - 2](t);
  return pieces_[i - 1](t);
}

CumulativeFunction linear_combination(
    const std::vector<std::pair<Rational, CumulativeFunction>>& terms) {
  if (terms.empty())
    throw PreconditionError("linear_combination: at least one term required");
  std::set<Rational> bset;
  for (const auto& [c, F] : terms)
    for (const Rational& b : F.breakpoints()) bset.insert(b);
  std::vector<Rational> breaks(bset.begin(), bset.end());

  std::vector<Poly> pieces(breaks.size() - 1);
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    Rational mid = (breaks[i] + breaks[i + 1]) / 2;
    for (const auto& [c, F] : terms) {
      const auto& fb = F.breakpoints();
      size_t j = std::upper_bound(fb.begin(), fb.end(), mid) - fb.begin();
      pieces[i] += c * F.pieces()[j - 1];
    }
  }

  std::map<Rational, Rational> amap;
  for (const auto& [c, F] : terms)
    for (const Atom& a : F.atoms()) amap[a.location] += c * a.mass;
  std::vector<Atom> atoms;
  for (const auto& [loc, mass] : amap)
    if (sgn(mass) != 0) atoms.push_back({loc, mass});

  return CumulativeFunction(std::move(breaks), std::move(pieces), std::move(atoms));
}

PiecewiseFunction primitive(const CumulativeFunction& F) {
  const auto& breaks = F.breakpoints();
  std::vector<Poly> gs;
  gs.reserve(F.pieces().size());
  Rational acc(0);
  for (size_t i = 0; i < F.pieces().size(); ++i) {
    Poly anti = F.pieces()[i].antiderivative();
    Poly g = anti + Poly::constant(acc - anti(breaks[i]));
    acc = g(breaks[i + 1]);
    gs.push_back(std::move(g));
  }
  return PiecewiseFunction(breaks, std::move(gs));
}

Rational stieltjes_poly(const CumulativeFunction& F, const Poly& f) {
  Rational total(0);
  const auto& breaks = F.breakpoints();
  for (size_t i = 0; i < F.pieces().size(); ++i) {
    Poly anti = (f * F.pieces()[i].derivative()).antiderivative();
    total += anti(breaks[i + 1]) - anti(breaks[i]);
  }
  for (const Atom& a : F.atoms()) total += f(a.location) * a.mass;
  return total;
}

Rational moment(const CumulativeFunction& F, int k) {
  return stieltjes_poly(F, Poly::monomial(k));
}

std::vector<Crossing> crossing_points(const CumulativeFunction& F1,
                                      const CumulativeFunction& F2) {
  CumulativeFunction D =
      linear_combination({{Rational(1), F1}, {Rational(-1), F2}});
  std::vector<Crossing> out;
  int last_sign = 0;
  Rational gap_lo(0);
  for (size_t i = 0; i < D.pieces().size(); ++i) {
    const Poly& piece = D.pieces()[i];
    if (piece.is_zero()) continue;  // zero stretch widens the separator
    for (const SignRegion& r :
         sign_regions(piece, D.breakpoints()[i], D.breakpoints()[i + 1])) {
      if (last_sign != 0 && r.sign != last_sign)
        out.push_back({gap_lo, r.lo, last_sign, r.sign});
      last_sign = r.sign;
      gap_lo = r.hi;
    }
  }
  return out;
}

bool is_cdf(const CumulativeFunction& F) {
  for (const Atom& a : F.atoms())
    if (sgn(a.mass) < 0) return false;
  const auto& breaks = F.breakpoints();
  for (size_t i = 0; i < F.pieces().size(); ++i) {
    IntervalSign s =
        sign_on_interval(F.pieces()[i].derivative(), breaks[i], breaks[i + 1]);
    if (s == IntervalSign::Mixed || s == IntervalSign::Nonpositive) return false;
  }
  return F.total_mass() == 1;
}

std::string CumulativeFunction::to_json() const {
  nlohmann::json j;
  j["breakpoints"] = nlohmann::json::array();
  for (const Rational& b : breaks_) j["breakpoints"].push_back(cvo::to_string(b));
  j["pieces"] = nlohmann::json::array();
  for (const Poly& p : pieces_) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(cvo::to_string(c));
    j["pieces"].push_back(coeffs);
  }
  j["atoms"] = nlohmann::json::array();
  for (const Atom& a : atoms_)
    j["atoms"].push_back({{"location", cvo::to_string(a.location)},
                          {"mass", cvo::to_string(a.mass)}});
  return j.dump();
}

CumulativeFunction CumulativeFunction::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Rational> breaks;
  for (const auto& b : j.at("breakpoints"))
    breaks.push_back(parse_rational(b.get<std::string>()));
  std::vector<Poly> pieces;
  for (const auto& pc : j.at("pieces")) {
    std::vector<Rational> coeffs;
    for (const auto& c : pc) coeffs.push_back(parse_rational(c.get<std::string>()));
    pieces.emplace_back(std::move(coeffs));
  }
  std::vector<Atom> atoms;
  for (const auto& a : j.at("atoms"))
    atoms.push_back({parse_rational(a.at("location").get<std::string>()),
                     parse_rational(a.at("mass").get<std::string>())});
  return CumulativeFunction(std::move(breaks), std::move(pieces), std::move(atoms));
}

}  // namespace cvo
