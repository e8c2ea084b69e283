#include "cvo/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace cvo {

namespace {

Rational parse_keyed_param(const std::string& body, const std::string& key,
                           const std::string& whole) {
  auto eq = body.find('=');
  if (eq == std::string::npos || body.substr(0, eq) != key)
    throw InvalidParameterError("expected '" + key + "=<rational>' in: " + whole);
  return parse_rational(body.substr(eq + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

void FunctionalSpec::validate() const {
  switch (kind) {
    case Kind::S1:
      if (!(param > 0 && param < 1))
        throw InvalidParameterError("S1 requires alpha in (0,1)");
      break;
    case Kind::EvalAt:
    case Kind::Endpoints:
    case Kind::S2:
      if (param < 0 || param > 1)
        throw InvalidParameterError("alpha must lie in [0,1]");
      break;
    case Kind::Mixture: {
      if (terms.empty())
        throw InvalidParameterError("mixture needs at least one term");
      Rational sum(0);
      for (const auto& [c, s] : terms) {
        sum += c;
        s.validate();
      }
      if (sum != 1)
        throw InvalidParameterError("mixture coefficients must sum to 1");
      break;
    }
    default:
      break;
  }
}

std::string FunctionalSpec::to_string() const {
  switch (kind) {
    case Kind::Uniform: return "uniform";
    case Kind::Midpoint: return "mid";
    case Kind::Trapezoid: return "trap";
    case Kind::DoubleAverage: return "davg";
    case Kind::SimpsonLike: return "simpson";
    case Kind::CompositeQuarter: return "quarter";
    case Kind::T: return "T:a=" + cvo::to_string(param);
    case Kind::EvalAt: return "evalat:alpha=" + cvo::to_string(param);
    case Kind::Endpoints: return "endpoints:alpha=" + cvo::to_string(param);
    case Kind::S1: return "S1:alpha=" + cvo::to_string(param);
    case Kind::S2: return "S2:alpha=" + cvo::to_string(param);
    case Kind::Mixture: {
      std::string out = "mix:";
      for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += "+";
        out += cvo::to_string(terms[i].first) + "*" + terms[i].second.to_string();
      }
      return out;
    }
  }
  return "?";
}

FunctionalSpec FunctionalSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidParameterError("empty functional spec");

  std::string head = s, body;
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    head = s.substr(0, colon);
    body = s.substr(colon + 1);
  }
  std::string h = lower(head);

  FunctionalSpec spec;
  if (h == "uniform" || h == "mean") {
    spec = uniform();
  } else if (h == "mid" || h == "midpoint") {
    spec = midpoint();
  } else if (h == "trap" || h == "trapezoid") {
    spec = trapezoid();
  } else if (h == "davg" || h == "doubleaverage") {
    spec = double_average();
  } else if (h == "simpson") {
    spec = simpson_like();
  } else if (h == "quarter") {
    spec = composite_quarter();
  } else if (h == "t") {
    spec = t_family(parse_keyed_param(body, "a", text));
  } else if (h == "evalat") {
    spec = eval_at(parse_keyed_param(body, "alpha", text));
  } else if (h == "endpoints") {
    spec = endpoints(parse_keyed_param(body, "alpha", text));
  } else if (h == "s1") {
    spec = s1(parse_keyed_param(body, "alpha", text));
  } else if (h == "s2") {
    spec = s2(parse_keyed_param(body, "alpha", text));
  } else if (h == "mix") {
    std::vector<std::pair<Rational, FunctionalSpec>> terms;
    size_t pos = 0;
    while (pos < body.size()) {
      size_t next = body.find('+', pos);
      std::string term = body.substr(pos, next == std::string::npos
                                              ? std::string::npos
                                              : next - pos);
      auto star = term.find('*');
      if (star == std::string::npos)
        throw InvalidParameterError("mixture term needs 'coeff*spec': " + term);
      terms.emplace_back(parse_rational(term.substr(0, star)),
                         parse(term.substr(star + 1)));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    spec = mixture(std::move(terms));
  } else {
    throw InvalidParameterError("unknown functional spec: " + text);
  }
  spec.validate();
  return spec;
}

CumulativeFunction make_weight(const FunctionalSpec& spec) {
  spec.validate();
  const Rational zero(0), one(1), half(1, 2);
  using K = FunctionalSpec::Kind;
  switch (spec.kind) {
    case K::Uniform:
      return CumulativeFunction({zero, one}, {Poly{zero, one}}, {});
    case K::Midpoint:
      return CumulativeFunction({zero, half, one}, {Poly(), Poly{one}},
                                {{half, one}});
    case K::Trapezoid:
      return CumulativeFunction({zero, one}, {Poly{half}},
                                {{zero, half}, {one, half}});
    case K::DoubleAverage:
      return CumulativeFunction(
          {zero, half, one},
          {Poly{zero, zero, Rational(2)},
           Poly{Rational(-1), Rational(4), Rational(-2)}},
          {});
    case K::SimpsonLike:
      return CumulativeFunction(
          {zero, half, one}, {Poly{Rational(1, 6)}, Poly{Rational(5, 6)}},
          {{zero, Rational(1, 6)}, {half, Rational(2, 3)}, {one, Rational(1, 6)}});
    case K::CompositeQuarter:
      return CumulativeFunction(
          {zero, Rational(1, 4), half, Rational(3, 4), one},
          {Poly{zero, zero, Rational(4)},
           Poly{Rational(-1, 2), Rational(4), Rational(-4)},
           Poly{Rational(3, 2), Rational(-4), Rational(4)},
           Poly{Rational(-3), Rational(8), Rational(-4)}},
          {});
    case K::T: {
      const Rational& a = spec.param;
      return CumulativeFunction(
          {zero, half, one},
          {Poly{zero, 1 - a / 2, a},
           Poly{-a / 2, 1 + 3 * a / 2, -a}},
          {});
    }
    case K::EvalAt: {
      Rational c = 1 - spec.param;
      if (c == 0)
        return CumulativeFunction({zero, one}, {Poly{one}}, {{zero, one}});
      if (c == 1)
        return CumulativeFunction({zero, one}, {Poly()}, {{one, one}});
      return CumulativeFunction({zero, c, one}, {Poly(), Poly{one}}, {{c, one}});
    }
    case K::Endpoints: {
      const Rational& al = spec.param;
      return CumulativeFunction({zero, one}, {Poly{al}},
                                {{zero, al}, {one, 1 - al}});
    }
    case K::S1: {
      const Rational& al = spec.param;
      Rational c = 1 - al;
      return CumulativeFunction(
          {zero, c, one},
          {Poly{zero, al / (1 - al)},
           Poly{(2 * al - 1) / al, (1 - al) / al}},
          {});
    }
    case K::S2: {
      const Rational& al = spec.param;
      return CumulativeFunction({zero, one},
                                {Poly{zero, 6 * al - 2, 3 - 6 * al}}, {});
    }
    case K::Mixture: {
      std::vector<std::pair<Rational, CumulativeFunction>> parts;
      parts.reserve(spec.terms.size());
      for (const auto& [c, sub] : spec.terms)
        parts.emplace_back(c, make_weight(sub));
      return linear_combination(parts);
    }
  }
  throw InvalidParameterError("unhandled functional kind");
}

Rational functional_value_exact(const FunctionalSpec& spec, const Poly& f) {
  spec.validate();
  const Rational half(1, 2);
  Poly F = f.antiderivative();
  Poly Phi = F.antiderivative();
  using K = FunctionalSpec::Kind;
  switch (spec.kind) {
    case K::Uniform:
      return F(Rational(1)) - F(Rational(0));
    case K::Midpoint:
      return f(half);
    case K::Trapezoid:
      return (f(Rational(0)) + f(Rational(1))) / 2;
    case K::DoubleAverage:
      return 4 * (Phi(Rational(0)) - 2 * Phi(half) + Phi(Rational(1)));
    case K::SimpsonLike:
      return f(Rational(0)) / 6 + 2 * f(half) / 3 + f(Rational(1)) / 6;
    case K::CompositeQuarter:
      return 8 * Phi(Rational(0)) - 16 * Phi(Rational(1, 4)) +
             16 * Phi(half) - 16 * Phi(Rational(3, 4)) + 8 * Phi(Rational(1));
    case K::T: {
      const Rational& a = spec.param;
      return (1 - a / 2) * (F(Rational(1)) - F(Rational(0))) +
             2 * a * (Phi(Rational(0)) - 2 * Phi(half) + Phi(Rational(1)));
    }
    case K::EvalAt:
      return f(1 - spec.param);
    case K::Endpoints:
      return spec.param * f(Rational(0)) + (1 - spec.param) * f(Rational(1));
    case K::S1: {
      const Rational& al = spec.param;
      return (-al / (1 - al)) * F(Rational(0)) +
             ((2 * al - 1) / (al * (1 - al))) * F(1 - al) +
             ((1 - al) / al) * F(Rational(1));
    }
    case K::S2: {
      const Rational& al = spec.param;
      return (4 - 6 * al) * F(Rational(1)) + (2 - 6 * al) * F(Rational(0)) -
             (6 - 12 * al) * (Phi(Rational(1)) - Phi(Rational(0)));
    }
    case K::Mixture: {
      Rational total(0);
      for (const auto& [c, sub] : spec.terms)
        total += c * functional_value_exact(sub, f);
      return total;
    }
  }
  throw InvalidParameterError("unhandled functional kind");
}

}  // namespace cvo
