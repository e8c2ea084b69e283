#include "doctest.h"

#include "cvo/catalog.hpp"
#include "cvo/convex_order.hpp"

using namespace cvo;

namespace {
const Rational k0(0), k1(1), kHalf(1, 2);
using Kind = FunctionalSpec::Kind;

std::vector<FunctionalSpec> representative_specs() {
  return {
      FunctionalSpec::uniform(),
      FunctionalSpec::midpoint(),
      FunctionalSpec::trapezoid(),
      FunctionalSpec::double_average(),
      FunctionalSpec::simpson_like(),
      FunctionalSpec::composite_quarter(),
      FunctionalSpec::t_family(Rational(6)),
      FunctionalSpec::t_family(Rational(-10)),
      FunctionalSpec::t_family(rat(7, 3)),
      FunctionalSpec::eval_at(rat(1, 4)),
      FunctionalSpec::eval_at(k0),
      FunctionalSpec::eval_at(k1),
      FunctionalSpec::endpoints(rat(1, 4)),
      FunctionalSpec::s1(rat(1, 4)),
      FunctionalSpec::s1(rat(9, 10)),
      FunctionalSpec::s2(rat(1, 5)),
      FunctionalSpec::s2(rat(2, 3)),
      FunctionalSpec::mixture({{rat(3, 4), FunctionalSpec::double_average()},
                               {rat(1, 4), FunctionalSpec::trapezoid()}}),
  };
}
}  // namespace

TEST_CASE("weight construction basics") {
  SUBCASE("double average pieces") {
    CumulativeFunction F = make_weight(FunctionalSpec::double_average());
    REQUIRE(F.pieces().size() == 2);
    CHECK(F.pieces()[0] == Poly{k0, k0, Rational(2)});
    CHECK(F.pieces()[1] == Poly{Rational(-1), Rational(4), Rational(-2)});
    CHECK(F.atoms().empty());
  }
  SUBCASE("three-point weight atoms") {
    CumulativeFunction F = make_weight(FunctionalSpec::simpson_like());
    REQUIRE(F.atoms().size() == 3);
    CHECK(F.atoms()[0] == Atom{k0, rat(1, 6)});
    CHECK(F.atoms()[1] == Atom{kHalf, rat(2, 3)});
    CHECK(F.atoms()[2] == Atom{k1, rat(1, 6)});
  }
  SUBCASE("degenerate parameters collapse to the uniform weight") {
    CHECK(make_weight(FunctionalSpec::t_family(k0)) ==
          make_weight(FunctionalSpec::uniform()));
    CHECK(make_weight(FunctionalSpec::s2(kHalf)) ==
          make_weight(FunctionalSpec::uniform()));
  }
  SUBCASE("composite quarter weight is continuous with full mass") {
    CumulativeFunction F = make_weight(FunctionalSpec::composite_quarter());
    CHECK(F.atoms().empty());  // continuity: no jumps anywhere
    CHECK(F.total_mass() == k1);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_weight(FunctionalSpec::s1(k0)), InvalidParameterError);
  CHECK_THROWS_AS(make_weight(FunctionalSpec::s1(k1)), InvalidParameterError);
  CHECK_THROWS_AS(make_weight(FunctionalSpec::eval_at(Rational(2))),
                  InvalidParameterError);
  CHECK_THROWS_AS(
      make_weight(FunctionalSpec::mixture(
          {{kHalf, FunctionalSpec::uniform()}})),  // coefficients sum to 1/2
      InvalidParameterError);
  CHECK_THROWS_AS(make_weight(FunctionalSpec::mixture({})),
                  InvalidParameterError);
}

TEST_CASE("exact functional values") {
  Poly t2 = Poly::monomial(2);
  CHECK(functional_value_exact(FunctionalSpec::t_family(Rational(6)), t2) ==
        rat(5, 24));
  CHECK(functional_value_exact(FunctionalSpec::s1(rat(1, 4)), t2) == rat(5, 8));
  CHECK(functional_value_exact(FunctionalSpec::uniform(), t2) == rat(1, 3));
  CHECK(functional_value_exact(FunctionalSpec::double_average(), t2) ==
        rat(7, 24));
  CHECK(functional_value_exact(FunctionalSpec::midpoint(), t2) == rat(1, 4));
  CHECK(functional_value_exact(FunctionalSpec::trapezoid(), t2) == kHalf);
}

TEST_CASE("representation identity: weight route equals antiderivative route") {
  // For every catalogued spec and monomials up to degree 6, the Stieltjes
  // integral against the constructed weight must equal the closed form,
  // as an identity of rationals.
  for (const FunctionalSpec& spec : representative_specs()) {
    CumulativeFunction F = make_weight(spec);
    for (int k = 0; k <= 6; ++k) {
      Poly f = Poly::monomial(k);
      CHECK_MESSAGE(stieltjes_poly(F, f) == functional_value_exact(spec, f),
                    spec.to_string(), " at degree ", k);
    }
    // and a dense degree-6 polynomial for good measure
    Poly dense{rat(1, 3), Rational(-2), k1, rat(5, 7), k0, Rational(3), rat(-1, 2)};
    CHECK(stieltjes_poly(F, dense) == functional_value_exact(spec, dense));
  }
}

TEST_CASE("normalization of every catalog weight") {
  for (const FunctionalSpec& spec : representative_specs()) {
    CumulativeFunction F = make_weight(spec);
    CHECK(F.value(k0, CumulativeFunction::Side::Left) == k0);
    CHECK(F.total_mass() == k1);
  }
}

TEST_CASE("the a=2 member coincides with the double average") {
  CHECK(make_weight(FunctionalSpec::t_family(Rational(2))) ==
        make_weight(FunctionalSpec::double_average()));
  for (int k = 0; k <= 6; ++k)
    CHECK(functional_value_exact(FunctionalSpec::t_family(Rational(2)),
                                 Poly::monomial(k)) ==
          functional_value_exact(FunctionalSpec::double_average(),
                                 Poly::monomial(k)));
}

TEST_CASE("mixture weight commutes with linear combination") {
  auto davg = FunctionalSpec::double_average();
  auto trap = FunctionalSpec::trapezoid();
  auto mix = FunctionalSpec::mixture({{rat(3, 4), davg}, {rat(1, 4), trap}});
  CHECK(make_weight(mix) ==
        linear_combination({{rat(3, 4), make_weight(davg)},
                            {rat(1, 4), make_weight(trap)}}));
}

TEST_CASE("spec string grammar round trips") {
  const char* inputs[] = {
      "uniform", "mid", "trap", "davg", "simpson", "quarter",
      "T:a=6", "T:a=-10", "T:a=7/3", "evalat:alpha=1/4",
      "endpoints:alpha=3/4", "S1:alpha=1/4", "S2:alpha=1/3",
      "mix:3/4*davg+1/4*trap", "mix:1/2*T:a=4+1/2*mid",
  };
  for (const char* in : inputs) {
    FunctionalSpec spec = FunctionalSpec::parse(in);
    CHECK(FunctionalSpec::parse(spec.to_string()) == spec);
  }
  CHECK(FunctionalSpec::parse("midpoint") == FunctionalSpec::midpoint());
  CHECK(FunctionalSpec::parse("trapezoid") == FunctionalSpec::trapezoid());
  CHECK(FunctionalSpec::parse("T:a=6").param == Rational(6));
  CHECK_THROWS_AS(FunctionalSpec::parse("nope"), InvalidParameterError);
  CHECK_THROWS_AS(FunctionalSpec::parse("T:b=6"), InvalidParameterError);
  CHECK_THROWS_AS(FunctionalSpec::parse("S1:alpha=0"), InvalidParameterError);
  CHECK_THROWS_AS(FunctionalSpec::parse("mix:1/2*mid"), InvalidParameterError);
}

TEST_CASE("point-evaluation weights at the alpha extremes") {
  Poly t3 = Poly::monomial(3);
  CHECK(functional_value_exact(FunctionalSpec::eval_at(k0), t3) == k1);  // f(1)
  CHECK(functional_value_exact(FunctionalSpec::eval_at(k1), t3) == k0);  // f(0)
  CHECK(stieltjes_poly(make_weight(FunctionalSpec::eval_at(k0)), t3) == k1);
  CHECK(stieltjes_poly(make_weight(FunctionalSpec::eval_at(k1)), t3) == k0);
}
