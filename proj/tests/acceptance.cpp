// Acceptance suite: one checked criterion per section, one line of output
// each. Exact verdicts carry zero tolerance; numeric checks use the stated
// absolute tolerances. Exit status 0 iff everything passes.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cvo/harness.hpp"
#include "cvo/kernels.hpp"

using namespace cvo;

namespace {

int g_failures = 0;
std::vector<std::pair<CumulativeFunction, CumulativeFunction>> g_le_pairs;
std::vector<Verdict> g_incomparable_verdicts;
std::vector<std::pair<CumulativeFunction, CumulativeFunction>> g_incomparable_pairs;

void report(int number, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.empty() ? "" : ("  (" + detail + ")").c_str());
  if (!ok) ++g_failures;
}

// Track pairs for the witness and property criteria.
Verdict classify(const FunctionalSpec& a, const FunctionalSpec& b) {
  CumulativeFunction Fa = make_weight(a), Fb = make_weight(b);
  Verdict v = levin_stechkin_compare(Fa, Fb);
  if (v.relation == Relation::LessOrEqual || v.relation == Relation::Equal)
    g_le_pairs.emplace_back(Fa, Fb);
  if (v.relation == Relation::Incomparable) {
    g_incomparable_verdicts.push_back(v);
    g_incomparable_pairs.emplace_back(Fa, Fb);
  }
  return v;
}

bool expect(const FunctionalSpec& a, const FunctionalSpec& b, Relation want,
            std::string& log) {
  Relation got = classify(a, b).relation;
  bool ok = got == want ||
            (got == Relation::Equal && (want == Relation::LessOrEqual ||
                                        want == Relation::GreaterOrEqual));
  if (!ok)
    log += " [" + a.to_string() + " vs " + b.to_string() + ": wanted " +
           to_string(want) + ", got " + to_string(got) + "]";
  return ok;
}

void criterion_1_regime_table() {
  bool ok = true;
  std::string log;
  const FunctionalSpec uniform = FunctionalSpec::uniform();
  const FunctionalSpec mid = FunctionalSpec::midpoint();
  const FunctionalSpec trap = FunctionalSpec::trapezoid();
  for (long a : {-10L, -6L, -2L, 0L, 1L, 2L, 4L, 6L, 8L}) {
    FunctionalSpec Ta = FunctionalSpec::t_family(Rational(a));
    if (a >= 0) ok &= expect(Ta, uniform, Relation::LessOrEqual, log);
    if (a <= 0) ok &= expect(Ta, uniform, Relation::GreaterOrEqual, log);
    if (a <= 2) ok &= expect(Ta, mid, Relation::GreaterOrEqual, log);
    if (a >= 6) ok &= expect(Ta, mid, Relation::LessOrEqual, log);
    if (a == 4) ok &= expect(Ta, mid, Relation::Incomparable, log);
    if (a >= -6) ok &= expect(Ta, trap, Relation::LessOrEqual, log);
    if (a == -10) ok &= expect(Ta, trap, Relation::Incomparable, log);
  }
  report(1, "regime table of the second-difference family", ok, log);
}

void criterion_2_thresholds() {
  const Rational tol = parse_rational("1e-9");
  bool ok = true;
  std::string log;
  auto check_exact = [&](const char* what, const ThresholdResult& r,
                         const Rational& want) {
    if (!(r.exact && r.value == want)) {
      ok = false;
      log += std::string(" [") + what + ": got " + to_string(r.value) +
             (r.exact ? "" : " (inexact)") + "]";
    }
  };
  check_exact("T vs mid lower",
              find_threshold(family_from_name("T"), FunctionalSpec::midpoint(),
                             ThresholdDir::GE, Rational(0), Rational(4), tol),
              Rational(2));
  check_exact("T vs mid upper",
              find_threshold(family_from_name("T"), FunctionalSpec::midpoint(),
                             ThresholdDir::LE, Rational(4), Rational(8), tol),
              Rational(6));
  check_exact("T vs trap",
              find_threshold(family_from_name("T"), FunctionalSpec::trapezoid(),
                             ThresholdDir::LE, Rational(-10), Rational(-2), tol),
              Rational(-6));
  check_exact("davg/trap mixture vs mean",
              find_threshold(family_from_name("davg-trap"),
                             FunctionalSpec::uniform(), ThresholdDir::GE,
                             rat(1, 2), Rational(1), tol),
              rat(3, 4));
  check_exact("uniform/mid mixture vs davg",
              find_threshold(family_from_name("unif-mid"),
                             FunctionalSpec::double_average(), ThresholdDir::GE,
                             rat(1, 2), Rational(1), tol),
              rat(2, 3));
  check_exact("three-point rule vs davg",
              find_threshold(family_from_name("threepoint"),
                             FunctionalSpec::double_average(), ThresholdDir::GE,
                             Rational(0), rat(1, 2), tol),
              rat(1, 6));
  auto evalat_le_s2 = [](const Rational& al) {
    return verdict_holds(
        levin_stechkin_compare(make_weight(FunctionalSpec::eval_at(al)),
                               make_weight(FunctionalSpec::s2(al))),
        ThresholdDir::LE);
  };
  check_exact("evalat vs S2 lower band",
              find_threshold(evalat_le_s2, rat(1, 10), rat(1, 2), tol),
              rat(1, 3));
  check_exact("evalat vs S2 upper band",
              find_threshold(evalat_le_s2, rat(1, 2), rat(9, 10), tol),
              rat(2, 3));
  report(2, "sharp constants recovered exactly", ok, log);
}

void criterion_3_mixture_values() {
  const double tol = 1e-10;
  TestFunction t2 = TestFunction::power(2);
  auto value = [&](const FunctionalSpec& s) {
    return functional_numeric(s, t2, 0, 1, 1e-12).primary.value;
  };
  double davg = value(FunctionalSpec::double_average());
  double mean = value(FunctionalSpec::uniform());
  double mid = value(FunctionalSpec::midpoint());
  double trap = value(FunctionalSpec::trapezoid());
  double lhs_i = 3 * davg;             // 7/8
  double rhs_i = 2 * mean + mid;       // 11/12
  double lhs_ii = 4 * mean;            // 4/3
  double rhs_ii = 3 * davg + trap;     // 11/8
  bool ok = std::abs(lhs_i - 7.0 / 8) <= tol &&
            std::abs(rhs_i - 11.0 / 12) <= tol &&
            std::abs(lhs_ii - 4.0 / 3) <= tol &&
            std::abs(rhs_ii - 11.0 / 8) <= tol && lhs_i <= rhs_i + tol &&
            lhs_ii <= rhs_ii + tol;
  report(3, "boundary mixture inequalities on f = t^2 (7/8 <= 11/12, 4/3 <= 11/8)",
         ok);
}

void criterion_4_second_antiderivative_identity() {
  const double tol = 1e-10;
  bool ok = true;
  std::string log;
  CumulativeFunction davg_w = make_weight(FunctionalSpec::double_average());
  struct NamedF {
    const char* name;
    TestFunction f;
  };
  NamedF cases[] = {
      {"exp", TestFunction::exponential(1.0)},
      {"t^4", TestFunction::power(4)},
      {"hinge(1/3)", TestFunction::hinge(1.0 / 3)},
  };
  for (const auto& c : cases) {
    double stieltjes = stieltjes_numeric(c.f, davg_w, 1e-12).value;
    double phi0 = 0.0;  // antiderivatives based at 0
    double phi_half = second_antiderivative(c.f, 0.0, 0.5, 1e-12);
    double phi1 = second_antiderivative(c.f, 0.0, 1.0, 1e-12);
    double bracket = 4 * (phi0 - 2 * phi_half + phi1);
    if (std::abs(stieltjes - bracket) > tol) {
      ok = false;
      log += std::string(" [") + c.name + ": |" + std::to_string(stieltjes) +
             " - " + std::to_string(bracket) + "| > 1e-10]";
    }
  }
  report(4, "double average equals the iterated-antiderivative bracket", ok, log);
}

void criterion_5_sandwich() {
  bool ok = true;
  std::string log;
  for (auto [n, d] : {std::pair<long, long>{1, 10}, {1, 4}, {1, 2}, {3, 4}, {9, 10}}) {
    Rational al = rat(n, d);
    ok &= expect(FunctionalSpec::eval_at(al), FunctionalSpec::s1(al),
                 Relation::LessOrEqual, log);
    ok &= expect(FunctionalSpec::s1(al), FunctionalSpec::endpoints(al),
                 Relation::LessOrEqual, log);
  }
  report(5, "point value <= S1 <= endpoint average across alpha", ok, log);
}

void criterion_6_s2_claims() {
  bool ok = true;
  std::string log;
  for (int i = 1; i <= 9; ++i) {
    Rational al = rat(i, 10);
    ok &= expect(FunctionalSpec::s2(al), FunctionalSpec::endpoints(al),
                 Relation::LessOrEqual, log);
  }
  for (auto [n, d] : {std::pair<long, long>{1, 3}, {2, 5}, {1, 2}, {3, 5}, {2, 3}}) {
    Rational al = rat(n, d);
    ok &= expect(FunctionalSpec::eval_at(al), FunctionalSpec::s2(al),
                 Relation::LessOrEqual, log);
  }
  for (auto [n, d] : {std::pair<long, long>{1, 10}, {1, 5}, {4, 5}, {9, 10}}) {
    Rational al = rat(n, d);
    ok &= expect(FunctionalSpec::eval_at(al), FunctionalSpec::s2(al),
                 Relation::Incomparable, log);
  }
  for (auto [n, d] : {std::pair<long, long>{1, 10}, {1, 3}, {2, 3}, {9, 10}}) {
    Rational al = rat(n, d);
    ok &= expect(FunctionalSpec::s2(al), FunctionalSpec::s1(al),
                 Relation::LessOrEqual, log);
  }
  for (auto [n, d] : {std::pair<long, long>{2, 5}, {3, 5}}) {
    Rational al = rat(n, d);
    ok &= expect(FunctionalSpec::s2(al), FunctionalSpec::s1(al),
                 Relation::Incomparable, log);
  }
  report(6, "S2 band structure vs endpoints, point value and S1", ok, log);
}

void criterion_7_composite_quarter() {
  std::string log;
  bool ok = expect(FunctionalSpec::composite_quarter(), FunctionalSpec::uniform(),
                   Relation::LessOrEqual, log);
  report(7, "composite quarter-point rule sits below the mean", ok, log);
}

void criterion_8_three_point_bound() {
  std::string log;
  bool ok = expect(FunctionalSpec::double_average(), FunctionalSpec::simpson_like(),
                   Relation::LessOrEqual, log);
  report(8, "double average <= 1/6,2/3,1/6 three-point rule", ok, log);
}

void criterion_9_moments_and_crossings() {
  bool ok = true;
  std::string log;
  for (int i = 1; i <= 9; ++i) {
    Rational al = rat(i, 10);
    if (moment(make_weight(FunctionalSpec::s2(al)), 2) != rat(5, 6) - al) {
      ok = false;
      log += " [S2 second moment wrong at " + to_string(al) + "]";
    }
    Rational c = 1 - al;
    if (moment(make_weight(FunctionalSpec::eval_at(al)), 2) != c * c) {
      ok = false;
      log += " [evalat second moment wrong at " + to_string(al) + "]";
    }
  }
  // Around (3 - sqrt(3))/6 ~ 0.2113248654: two crossings, and the
  // second-moment gap changes sign across the bracket.
  Rational lo = rat(21132, 100000), hi = rat(21133, 100000);
  for (const Rational& al : {lo, hi}) {
    auto crossings = crossing_points(make_weight(FunctionalSpec::s2(al)),
                                     make_weight(FunctionalSpec::eval_at(al)));
    if (crossings.size() != 2) {
      ok = false;
      log += " [expected 2 crossings at alpha=" + to_string(al) + ", got " +
             std::to_string(crossings.size()) + "]";
    }
  }
  auto m2gap = [](const Rational& al) -> Rational {
    return moment(make_weight(FunctionalSpec::s2(al)), 2) -
           moment(make_weight(FunctionalSpec::eval_at(al)), 2);
  };
  if (!(sgn(m2gap(lo)) < 0 && sgn(m2gap(hi)) > 0)) {
    ok = false;
    log += " [second-moment gap does not flip across the bracket]";
  }
  report(9, "exact second moments and crossing counts near the moment tie", ok,
         log);
}

void criterion_10_witnesses() {
  bool ok = !g_incomparable_verdicts.empty();
  std::string log;
  if (!ok) log = " [no incomparable verdicts collected]";
  for (size_t i = 0; i < g_incomparable_verdicts.size(); ++i) {
    const Verdict& v = g_incomparable_verdicts[i];
    const auto& [F1, F2] = g_incomparable_pairs[i];
    auto [plus, minus] = witness_functions(v);
    Rational exact_plus = hinge_gap(F1, F2, plus.knot);
    Rational exact_minus = hinge_gap(F1, F2, minus.knot);
    if (!(sgn(exact_plus) > 0 && sgn(exact_minus) < 0)) {
      ok = false;
      log += " [exact gaps not of opposite sign]";
      continue;
    }
    auto numeric_gap = [&](const HingeWitness& h) {
      TestFunction f = TestFunction::hinge(to_double(h.knot));
      return stieltjes_numeric(f, F2, 1e-12).value -
             stieltjes_numeric(f, F1, 1e-12).value;
    };
    if (!(numeric_gap(plus) > 0 && numeric_gap(minus) < 0)) {
      ok = false;
      log += " [numeric gaps disagree in sign]";
    }
  }
  report(10, "incomparability witnesses verified exactly and numerically", ok,
         log);
}

void criterion_11_property_suite() {
  bool ok = true;
  std::string log;
  // 200 seeded convex piecewise-linear functions against every recorded
  // LessOrEqual pair: the numeric gap never drops below -1e-12.
  std::vector<TestFunction> fs;
  fs.reserve(200);
  for (uint64_t seed = 0; seed < 200; ++seed)
    fs.push_back(random_convex(seed, 6));
  double worst = 0.0;
  for (const auto& [F1, F2] : g_le_pairs) {
    std::vector<double> gaps = numeric_gap_batch(F1, F2, fs, 1e-13);
    for (double g : gaps) worst = std::min(worst, g);
  }
  if (worst < -1e-12) {
    ok = false;
    log += " [worst numeric gap " + std::to_string(worst) + "]";
  }
  // Reparameterization invariance on [-3, 5].
  std::vector<FunctionalSpec> specs = {
      FunctionalSpec::uniform(),
      FunctionalSpec::midpoint(),
      FunctionalSpec::trapezoid(),
      FunctionalSpec::double_average(),
      FunctionalSpec::simpson_like(),
      FunctionalSpec::composite_quarter(),
      FunctionalSpec::t_family(Rational(6)),
      FunctionalSpec::t_family(Rational(-10)),
      FunctionalSpec::eval_at(rat(1, 4)),
      FunctionalSpec::endpoints(rat(3, 4)),
      FunctionalSpec::s1(rat(1, 4)),
      FunctionalSpec::s2(rat(2, 5)),
  };
  for (uint64_t seed = 300; seed < 310; ++seed) {
    TestFunction f = random_convex(seed, 5);
    TestFunction phi = f.reparameterized(-3, 5);
    for (const FunctionalSpec& spec : specs) {
      double general = functional_numeric(spec, f, -3, 5, 1e-12).primary.value;
      double normalized =
          functional_numeric(spec, phi, 0, 1, 1e-12).primary.value;
      if (std::abs(general - normalized) > 1e-10) {
        ok = false;
        log += " [invariance broken for " + spec.to_string() + "]";
      }
    }
  }
  report(11, "200-function convex property suite and interval invariance", ok,
         log);
}

}  // namespace

int main() {
  criterion_1_regime_table();
  criterion_2_thresholds();
  criterion_3_mixture_values();
  criterion_4_second_antiderivative_identity();
  criterion_5_sandwich();
  criterion_6_s2_claims();
  criterion_7_composite_quarter();
  criterion_8_three_point_bound();
  criterion_9_moments_and_crossings();
  criterion_10_witnesses();
  criterion_11_property_suite();
  if (g_failures == 0)
    std::printf("acceptance: all 11 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
