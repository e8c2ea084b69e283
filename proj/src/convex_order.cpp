#include "cvo/convex_order.hpp"

namespace cvo {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::LessOrEqual: return "LessOrEqual";
    case Relation::GreaterOrEqual: return "GreaterOrEqual";
    case Relation::Equal: return "Equal";
    case Relation::Incomparable: return "Incomparable";
    case Relation::NotNormalized: return "NotNormalized";
  }
  return "?";
}

std::string to_string(GapSign g) {
  switch (g) {
    case GapSign::Nonnegative: return "Nonnegative";
    case GapSign::Nonpositive: return "Nonpositive";
    case GapSign::Zero: return "Zero";
    case GapSign::Mixed: return "Mixed";
  }
  return "?";
}

namespace {

// Primitive of F2 - F1; the sign of this function on (0,1) decides the order.
PiecewiseFunction gap_primitive(const CumulativeFunction& F1,
                                const CumulativeFunction& F2) {
  return primitive(
      linear_combination({{Rational(1), F2}, {Rational(-1), F1}}));
}

GapSign classify_gap(const PiecewiseFunction& G) {
  bool pos = false, neg = false;
  const auto& breaks = G.breakpoints();
  for (size_t i = 0; i < G.piece_count(); ++i) {
    switch (sign_on_interval(G.pieces()[i], breaks[i], breaks[i + 1])) {
      case IntervalSign::Nonnegative: pos = true; break;
      case IntervalSign::Nonpositive: neg = true; break;
      case IntervalSign::Mixed: pos = neg = true; break;
      case IntervalSign::IdenticallyZero: break;
    }
    if (pos && neg) return GapSign::Mixed;
  }
  if (pos) return GapSign::Nonnegative;
  if (neg) return GapSign::Nonpositive;
  return GapSign::Zero;
}

std::optional<Rational> find_gap_point(const PiecewiseFunction& G, int want) {
  const auto& breaks = G.breakpoints();
  for (size_t i = 0; i < G.piece_count(); ++i) {
    auto p = find_point_with_sign(G.pieces()[i], breaks[i], breaks[i + 1], want);
    if (p && *p > 0 && *p < 1) return p;
  }
  return std::nullopt;
}

}  // namespace

Verdict levin_stechkin_compare(const CumulativeFunction& F1,
                               const CumulativeFunction& F2) {
  Verdict v;
  v.endpoint_check = F1.total_mass() == F2.total_mass();
  PiecewiseFunction G = gap_primitive(F1, F2);
  v.mean_check = G(Rational(1)) == 0;
  v.gap_sign = classify_gap(G);
  if (!v.endpoint_check || !v.mean_check) {
    v.relation = Relation::NotNormalized;
    return v;
  }
  switch (v.gap_sign) {
    case GapSign::Zero:
      v.relation = Relation::Equal;
      break;
    case GapSign::Nonnegative:
      v.relation = Relation::LessOrEqual;
      break;
    case GapSign::Nonpositive:
      v.relation = Relation::GreaterOrEqual;
      break;
    case GapSign::Mixed: {
      v.relation = Relation::Incomparable;
      auto cp = find_gap_point(G, +1);
      auto cm = find_gap_point(G, -1);
      if (!cp || !cm)
        throw std::logic_error("mixed primitive gap without witness points");
      v.witnesses = Witnesses{*cp, *cm, G(*cp), G(*cm)};
      break;
    }
  }
  return v;
}

std::optional<Direction> ohlin_compare(const CumulativeFunction& F1,
                                       const CumulativeFunction& F2) {
  if (!is_cdf(F1) || !is_cdf(F2))
    throw PreconditionError("ohlin_compare: inputs must be CDFs");
  if (moment(F1, 1) != moment(F2, 1))
    throw PreconditionError("ohlin_compare: first moments differ");
  std::vector<Crossing> crossings = crossing_points(F1, F2);
  if (crossings.size() != 1) return std::nullopt;
  // F1 below then above F2 pushes mass outward in F2's favour on convex f.
  return crossings[0].sign_before < 0 ? Direction::FirstLeSecond
                                      : Direction::SecondLeFirst;
}

Rational hinge_gap(const CumulativeFunction& F1, const CumulativeFunction& F2,
                   const Rational& c) {
  if (!(c > 0 && c < 1))
    throw PreconditionError("hinge_gap: knot must lie in (0,1)");
  if (F1.total_mass() != F2.total_mass())
    throw NotNormalizedError("hinge_gap: endpoint masses differ");
  PiecewiseFunction G = gap_primitive(F1, F2);
  if (G(Rational(1)) != 0)
    throw NotNormalizedError("hinge_gap: means differ");
  return G(c);
}

std::pair<HingeWitness, HingeWitness> witness_functions(const Verdict& v) {
  if (v.relation != Relation::Incomparable || !v.witnesses)
    throw NotIncomparableError("witness_functions: verdict is not Incomparable");
  if (!(sgn(v.witnesses->plus_gap) > 0 && sgn(v.witnesses->minus_gap) < 0))
    throw NotIncomparableError("witness_functions: stored gaps are not opposite");
  return {HingeWitness{v.witnesses->plus_location},
          HingeWitness{v.witnesses->minus_location}};
}

}  // namespace cvo
