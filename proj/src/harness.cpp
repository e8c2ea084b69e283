#include "cvo/harness.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cvo/kernels.hpp"
#include "json.hpp"

namespace cvo {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

bool claim_passes(Relation expected, Relation actual) {
  if (expected == actual) return true;
  // Equality satisfies either non-strict direction.
  if (actual == Relation::Equal)
    return expected == Relation::LessOrEqual ||
           expected == Relation::GreaterOrEqual;
  return false;
}

}  // namespace

bool SuiteResult::all_pass() const {
  for (const ClaimResult& r : rows)
    if (!r.pass) return false;
  return true;
}

bool verdict_holds(const Verdict& v, ThresholdDir dir) {
  if (v.relation == Relation::Equal) return true;
  return dir == ThresholdDir::LE ? v.relation == Relation::LessOrEqual
                                 : v.relation == Relation::GreaterOrEqual;
}

SuiteResult run_theorem_suite() {
  std::vector<Claim> claims;
  auto add = [&](std::string id, FunctionalSpec l, FunctionalSpec r,
                 Relation e) {
    claims.push_back({std::move(id), std::move(l), std::move(r), e});
  };
  const FunctionalSpec uniform = FunctionalSpec::uniform();
  const FunctionalSpec mid = FunctionalSpec::midpoint();
  const FunctionalSpec trap = FunctionalSpec::trapezoid();
  const FunctionalSpec davg = FunctionalSpec::double_average();

  // Classic two-sided mean bounds.
  add("classic:mid<=mean", mid, uniform, Relation::LessOrEqual);
  add("classic:mean<=trap", uniform, trap, Relation::LessOrEqual);

  // Second-difference family against the three reference functionals.
  const long t_grid[] = {-10, -6, -2, 0, 1, 2, 4, 6, 8};
  for (long a : t_grid) {
    FunctionalSpec Ta = FunctionalSpec::t_family(Rational(a));
    std::string tag = "@a=" + std::to_string(a);
    Relation vs_mean = a > 0   ? Relation::LessOrEqual
                       : a < 0 ? Relation::GreaterOrEqual
                               : Relation::Equal;
    add("T-vs-mean" + tag, Ta, uniform, vs_mean);
    Relation vs_mid = a <= 2   ? Relation::GreaterOrEqual
                      : a >= 6 ? Relation::LessOrEqual
                               : Relation::Incomparable;
    add("T-vs-mid" + tag, Ta, mid, vs_mid);
    Relation vs_trap =
        a >= -6 ? Relation::LessOrEqual : Relation::Incomparable;
    add("T-vs-trap" + tag, Ta, trap, vs_trap);
  }

  // The double average is the a=2 member.
  add("davg-is-T2", FunctionalSpec::t_family(Rational(2)), davg,
      Relation::Equal);

  // Sharp mixture bounds at their boundary constants.
  add("mean<=3/4davg+1/4trap", uniform,
      FunctionalSpec::mixture({{Rational(3, 4), davg}, {Rational(1, 4), trap}}),
      Relation::LessOrEqual);
  add("davg<=2/3mean+1/3mid", davg,
      FunctionalSpec::mixture({{Rational(2, 3), uniform}, {Rational(1, 3), mid}}),
      Relation::LessOrEqual);
  // The weaker previously known bound implied by the sharp one.
  add("3mean<=2davg+trap", uniform,
      FunctionalSpec::mixture({{Rational(2, 3), davg}, {Rational(1, 3), trap}}),
      Relation::LessOrEqual);

  // Three-point upper bound for the double average.
  add("davg<=simpson", davg, FunctionalSpec::simpson_like(),
      Relation::LessOrEqual);

  // Quarter-point composite rule sits below the mean.
  add("quarter<=mean", FunctionalSpec::composite_quarter(), uniform,
      Relation::LessOrEqual);

  // One-sided sandwich: evalat <= S1 <= endpoints.
  const std::pair<long, long> s1_grid[] = {{1, 10}, {1, 4}, {1, 2}, {3, 4}, {9, 10}};
  for (auto [num, den] : s1_grid) {
    Rational al = rat(num, den);
    std::string tag = "@alpha=" + cvo::to_string(al);
    add("evalat<=S1" + tag, FunctionalSpec::eval_at(al),
        FunctionalSpec::s1(al), Relation::LessOrEqual);
    add("S1<=endpoints" + tag, FunctionalSpec::s1(al),
        FunctionalSpec::endpoints(al), Relation::LessOrEqual);
  }

  // S2 claims: always below the endpoint average; comparable with evalat
  // only in the middle band; comparable with S1 outside the middle band.
  for (int i = 1; i <= 9; ++i) {
    Rational al = rat(i, 10);
    add("S2<=endpoints@alpha=" + cvo::to_string(al), FunctionalSpec::s2(al),
        FunctionalSpec::endpoints(al), Relation::LessOrEqual);
  }
  const std::pair<long, long> band_in[] = {{1, 3}, {2, 5}, {1, 2}, {3, 5}, {2, 3}};
  for (auto [num, den] : band_in) {
    Rational al = rat(num, den);
    add("evalat<=S2@alpha=" + cvo::to_string(al), FunctionalSpec::eval_at(al),
        FunctionalSpec::s2(al), Relation::LessOrEqual);
  }
  const std::pair<long, long> band_out[] = {{1, 10}, {1, 5}, {4, 5}, {9, 10}};
  for (auto [num, den] : band_out) {
    Rational al = rat(num, den);
    add("evalat-vs-S2@alpha=" + cvo::to_string(al), FunctionalSpec::eval_at(al),
        FunctionalSpec::s2(al), Relation::Incomparable);
  }
  const std::pair<long, long> s2s1_le[] = {{1, 10}, {1, 3}, {2, 3}, {9, 10}};
  for (auto [num, den] : s2s1_le) {
    Rational al = rat(num, den);
    add("S2<=S1@alpha=" + cvo::to_string(al), FunctionalSpec::s2(al),
        FunctionalSpec::s1(al), Relation::LessOrEqual);
  }
  const std::pair<long, long> s2s1_inc[] = {{2, 5}, {3, 5}};
  for (auto [num, den] : s2s1_inc) {
    Rational al = rat(num, den);
    add("S2-vs-S1@alpha=" + cvo::to_string(al), FunctionalSpec::s2(al),
        FunctionalSpec::s1(al), Relation::Incomparable);
  }

  std::vector<std::pair<FunctionalSpec, FunctionalSpec>> pairs;
  pairs.reserve(claims.size());
  for (const Claim& c : claims) pairs.emplace_back(c.left, c.right);
  std::vector<Verdict> verdicts = compare_sweep(pairs);

  SuiteResult result;
  result.rows.reserve(claims.size());
  for (size_t i = 0; i < claims.size(); ++i) {
    bool pass = claim_passes(claims[i].expected, verdicts[i].relation);
    result.rows.push_back({claims[i], verdicts[i], pass});
  }
  return result;
}

ThresholdResult find_threshold(const ParamPredicate& pred, Rational lo,
                               Rational hi, const Rational& tol) {
  if (!(lo < hi)) throw PreconditionError("find_threshold: lo must be < hi");
  if (!(tol > 0)) throw PreconditionError("find_threshold: tol must be positive");
  bool at_lo = pred(lo);
  bool at_hi = pred(hi);
  int probes = 2;
  if (at_lo == at_hi)
    throw NoBracketError("find_threshold: predicate agrees at both endpoints");

  auto shrink = [&](const Rational& m, bool pm) {
    if (pm == at_lo)
      lo = m;
    else
      hi = m;
  };

  Rational last_simplest = lo - 1;
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    bool pm = pred(mid);
    ++probes;
    shrink(mid, pm);
    if (hi - lo <= tol) break;
    Rational s = simplest_between(lo, hi);
    if (s != last_simplest) {
      last_simplest = s;
      bool ps = pred(s);
      ++probes;
      shrink(s, ps);
    }
  }

  // Certify the boundary candidate: keep probing the structurally
  // simplest interior points. A run of probes all landing on the false
  // side pins the flip to the true-side endpoint; any true probe means
  // the flip lies strictly beyond it.
  int consecutive_false = 0;
  for (int budget = 48; consecutive_false < 12 && budget > 0; --budget) {
    Rational s = simplest_between(lo, hi);
    bool ps = pred(s);
    ++probes;
    if (ps)
      consecutive_false = 0;
    else
      ++consecutive_false;
    shrink(s, ps);
  }

  ThresholdResult r;
  r.lo = lo;
  r.hi = hi;
  r.value = at_lo ? lo : hi;
  r.exact = consecutive_false >= 12;
  r.probes = probes;
  return r;
}

ThresholdResult find_threshold(const SpecFamily& family,
                               const FunctionalSpec& target, ThresholdDir dir,
                               const Rational& lo, const Rational& hi,
                               const Rational& tol) {
  CumulativeFunction target_weight = make_weight(target);
  auto pred = [&family, &target_weight, dir](const Rational& p) {
    return verdict_holds(
        levin_stechkin_compare(make_weight(family(p)), target_weight), dir);
  };
  return find_threshold(pred, lo, hi, tol);
}

RegimeReport sweep_regimes(
    const std::string& family_name, const SpecFamily& family,
    const std::vector<std::pair<std::string, FunctionalSpec>>& targets,
    const std::vector<Rational>& grid) {
  for (size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      throw PreconditionError("sweep_regimes: grid must be strictly increasing");
  RegimeReport rep;
  rep.family_name = family_name;
  rep.grid = grid;
  for (const auto& [name, spec] : targets) rep.target_names.push_back(name);

  std::vector<std::pair<FunctionalSpec, FunctionalSpec>> pairs;
  for (const Rational& p : grid)
    for (const auto& [name, spec] : targets)
      pairs.emplace_back(family(p), spec);
  std::vector<Verdict> flat = compare_sweep(pairs);

  rep.verdicts.resize(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    rep.verdicts[i] = {flat.begin() + i * targets.size(),
                       flat.begin() + (i + 1) * targets.size()};

  for (size_t j = 0; j < targets.size(); ++j)
    for (size_t i = 0; i + 1 < grid.size(); ++i)
      if (rep.verdicts[i][j].relation != rep.verdicts[i + 1][j].relation)
        rep.flip_brackets.push_back({targets[j].first, grid[i], grid[i + 1]});
  return rep;
}

ReportFormat format_from_string(const std::string& s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  throw InvalidParameterError("unknown format: " + s);
}

Relation relation_from_string(const std::string& s) {
  if (s == "LessOrEqual") return Relation::LessOrEqual;
  if (s == "GreaterOrEqual") return Relation::GreaterOrEqual;
  if (s == "Equal") return Relation::Equal;
  if (s == "Incomparable") return Relation::Incomparable;
  if (s == "NotNormalized") return Relation::NotNormalized;
  throw InvalidParameterError("unknown relation: " + s);
}

namespace {

GapSign gap_sign_from_string(const std::string& s) {
  if (s == "Nonnegative") return GapSign::Nonnegative;
  if (s == "Nonpositive") return GapSign::Nonpositive;
  if (s == "Zero") return GapSign::Zero;
  if (s == "Mixed") return GapSign::Mixed;
  throw InvalidParameterError("unknown gap sign: " + s);
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["relation"] = to_string(v.relation);
  j["endpoint_check"] = v.endpoint_check;
  j["mean_check"] = v.mean_check;
  j["gap_sign"] = to_string(v.gap_sign);
  if (v.witnesses) {
    j["witnesses"] = {
        {"plus_location", cvo::to_string(v.witnesses->plus_location)},
        {"minus_location", cvo::to_string(v.witnesses->minus_location)},
        {"plus_gap", cvo::to_string(v.witnesses->plus_gap)},
        {"minus_gap", cvo::to_string(v.witnesses->minus_gap)},
    };
  }
  return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
  Verdict v;
  v.relation = relation_from_string(j.at("relation").get<std::string>());
  v.endpoint_check = j.at("endpoint_check").get<bool>();
  v.mean_check = j.at("mean_check").get<bool>();
  v.gap_sign = gap_sign_from_string(j.at("gap_sign").get<std::string>());
  if (j.contains("witnesses")) {
    const auto& w = j.at("witnesses");
    v.witnesses = Witnesses{
        parse_rational(w.at("plus_location").get<std::string>()),
        parse_rational(w.at("minus_location").get<std::string>()),
        parse_rational(w.at("plus_gap").get<std::string>()),
        parse_rational(w.at("minus_gap").get<std::string>()),
    };
  }
  return v;
}

std::string witness_note(const Verdict& v) {
  if (!v.witnesses) return "";
  return "  witnesses: G(" + cvo::to_string(v.witnesses->plus_location) +
         ")=" + cvo::to_string(v.witnesses->plus_gap) + " > 0, G(" +
         cvo::to_string(v.witnesses->minus_location) +
         ")=" + cvo::to_string(v.witnesses->minus_gap) + " < 0";
}

}  // namespace

void emit_report(const SuiteResult& result, ReportFormat format,
                 std::ostream& os) {
  switch (format) {
    case ReportFormat::Text: {
      size_t failed = 0;
      for (const ClaimResult& r : result.rows) {
        os << (r.pass ? "[pass] " : "[FAIL] ") << r.claim.id << ": expected "
           << to_string(r.claim.expected) << ", got "
           << to_string(r.verdict.relation) << witness_note(r.verdict) << "\n";
        if (!r.pass) ++failed;
      }
      os << result.rows.size() << " claims, " << (result.rows.size() - failed)
         << " passed, " << failed << " failed\n";
      break;
    }
    case ReportFormat::Csv: {
      os << "id,left,right,expected,computed,pass,witness_plus,witness_minus,"
            "gap_plus,gap_minus\n";
      for (const ClaimResult& r : result.rows) {
        os << r.claim.id << "," << r.claim.left.to_string() << ","
           << r.claim.right.to_string() << "," << to_string(r.claim.expected)
           << "," << to_string(r.verdict.relation) << ","
           << (r.pass ? "1" : "0") << ",";
        if (r.verdict.witnesses) {
          os << cvo::to_string(r.verdict.witnesses->plus_location) << ","
             << cvo::to_string(r.verdict.witnesses->minus_location) << ","
             << cvo::to_string(r.verdict.witnesses->plus_gap) << ","
             << cvo::to_string(r.verdict.witnesses->minus_gap);
        } else {
          os << ",,,";
        }
        os << "\n";
      }
      break;
    }
    case ReportFormat::Json: {
      nlohmann::json j;
      j["claims"] = nlohmann::json::array();
      for (const ClaimResult& r : result.rows) {
        nlohmann::json row;
        row["id"] = r.claim.id;
        row["left"] = r.claim.left.to_string();
        row["right"] = r.claim.right.to_string();
        row["expected"] = to_string(r.claim.expected);
        row["verdict"] = verdict_to_json(r.verdict);
        row["pass"] = r.pass;
        j["claims"].push_back(row);
      }
      j["all_pass"] = result.all_pass();
      os << j.dump(2) << "\n";
      break;
    }
  }
}

SuiteResult parse_suite_result_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SuiteResult out;
  for (const auto& row : j.at("claims")) {
    ClaimResult r;
    r.claim.id = row.at("id").get<std::string>();
    r.claim.left = FunctionalSpec::parse(row.at("left").get<std::string>());
    r.claim.right = FunctionalSpec::parse(row.at("right").get<std::string>());
    r.claim.expected = relation_from_string(row.at("expected").get<std::string>());
    r.verdict = verdict_from_json(row.at("verdict"));
    r.pass = row.at("pass").get<bool>();
    out.rows.push_back(std::move(r));
  }
  return out;
}

void emit_report(const RegimeReport& report, ReportFormat format,
                 std::ostream& os) {
  switch (format) {
    case ReportFormat::Text: {
      os << "family " << report.family_name << "\n";
      for (size_t i = 0; i < report.grid.size(); ++i) {
        for (size_t j = 0; j < report.target_names.size(); ++j) {
          os << report.family_name << "(" << cvo::to_string(report.grid[i])
             << ") vs " << report.target_names[j] << ": "
             << to_string(report.verdicts[i][j].relation) << "\n";
        }
      }
      for (const RegimeBracket& b : report.flip_brackets)
        os << "flip vs " << b.target << " inside [" << cvo::to_string(b.lo)
           << ", " << cvo::to_string(b.hi) << "]\n";
      break;
    }
    case ReportFormat::Csv: {
      os << "param,target,relation,endpoint_check,mean_check,gap_sign,"
            "witness_plus,witness_minus\n";
      for (size_t i = 0; i < report.grid.size(); ++i) {
        for (size_t j = 0; j < report.target_names.size(); ++j) {
          const Verdict& v = report.verdicts[i][j];
          os << cvo::to_string(report.grid[i]) << "," << report.target_names[j]
             << "," << to_string(v.relation) << "," << v.endpoint_check << ","
             << v.mean_check << "," << to_string(v.gap_sign) << ",";
          if (v.witnesses)
            os << cvo::to_string(v.witnesses->plus_location) << ","
               << cvo::to_string(v.witnesses->minus_location);
          else
            os << ",";
          os << "\n";
        }
      }
      break;
    }
    case ReportFormat::Json: {
      nlohmann::json j;
      j["family"] = report.family_name;
      j["targets"] = report.target_names;
      j["rows"] = nlohmann::json::array();
      for (size_t i = 0; i < report.grid.size(); ++i) {
        for (size_t j2 = 0; j2 < report.target_names.size(); ++j2) {
          nlohmann::json row;
          row["param"] = cvo::to_string(report.grid[i]);
          row["target"] = report.target_names[j2];
          row["verdict"] = verdict_to_json(report.verdicts[i][j2]);
          j["rows"].push_back(row);
        }
      }
      j["flip_brackets"] = nlohmann::json::array();
      for (const RegimeBracket& b : report.flip_brackets)
        j["flip_brackets"].push_back({{"target", b.target},
                                      {"lo", cvo::to_string(b.lo)},
                                      {"hi", cvo::to_string(b.hi)}});
      os << j.dump(2) << "\n";
      break;
    }
  }
}

void emit_report(const ThresholdResult& result, ReportFormat format,
                 std::ostream& os) {
  switch (format) {
    case ReportFormat::Text:
      os << "bracket [" << cvo::to_string(result.lo) << ", "
         << cvo::to_string(result.hi) << "]\n"
         << "threshold " << cvo::to_string(result.value)
         << (result.exact ? " (exact)" : " (bracket only)") << ", "
         << result.probes << " probes\n";
      break;
    case ReportFormat::Csv:
      os << "lo,hi,value,exact,probes\n"
         << cvo::to_string(result.lo) << "," << cvo::to_string(result.hi) << ","
         << cvo::to_string(result.value) << "," << (result.exact ? "1" : "0")
         << "," << result.probes << "\n";
      break;
    case ReportFormat::Json: {
      nlohmann::json j;
      j["lo"] = cvo::to_string(result.lo);
      j["hi"] = cvo::to_string(result.hi);
      j["value"] = cvo::to_string(result.value);
      j["exact"] = result.exact;
      j["probes"] = result.probes;
      os << j.dump(2) << "\n";
      break;
    }
  }
}

namespace {

template <typename T>
void emit_to_path(const T& value, ReportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  emit_report(value, format, out);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

void emit_report(const SuiteResult& result, ReportFormat format,
                 const std::string& path) {
  emit_to_path(result, format, path);
}

void emit_report(const RegimeReport& report, ReportFormat format,
                 const std::string& path) {
  emit_to_path(report, format, path);
}

void emit_gap_samples(const CumulativeFunction& F1,
                      const CumulativeFunction& F2, int points,
                      std::ostream& os) {
  std::vector<double> g = sample_primitive_gap(F1, F2, points);
  os << "x,G\n";
  for (int i = 0; i < points; ++i) {
    double x = static_cast<double>(i) / (points - 1);
    os << fmt_double(x) << "," << fmt_double(g[i]) << "\n";
  }
}

const std::vector<NamedFamily>& named_families() {
  static const std::vector<NamedFamily> families = {
      {"T", "second-difference family, parameter a",
       [](const Rational& a) { return FunctionalSpec::t_family(a); }},
      {"S1", "three-term antiderivative rule, parameter alpha",
       [](const Rational& al) { return FunctionalSpec::s1(al); }},
      {"S2", "antiderivative + first-moment rule, parameter alpha",
       [](const Rational& al) { return FunctionalSpec::s2(al); }},
      {"evalat", "point evaluation f(1-alpha)",
       [](const Rational& al) { return FunctionalSpec::eval_at(al); }},
      {"endpoints", "endpoint average with weight alpha",
       [](const Rational& al) { return FunctionalSpec::endpoints(al); }},
      {"davg-trap", "lambda*davg + (1-lambda)*trap",
       [](const Rational& l) {
         return FunctionalSpec::mixture(
             {{l, FunctionalSpec::double_average()},
              {1 - l, FunctionalSpec::trapezoid()}});
       }},
      {"unif-mid", "gamma*uniform + (1-gamma)*mid",
       [](const Rational& g) {
         return FunctionalSpec::mixture({{g, FunctionalSpec::uniform()},
                                         {1 - g, FunctionalSpec::midpoint()}});
       }},
      {"threepoint", "a f(0) + (1-2a) f(1/2) + a f(1)",
       [](const Rational& a) {
         return FunctionalSpec::mixture(
             {{2 * a, FunctionalSpec::trapezoid()},
              {1 - 2 * a, FunctionalSpec::midpoint()}});
       }},
  };
  return families;
}

SpecFamily family_from_name(const std::string& name) {
  for (const NamedFamily& f : named_families())
    if (f.name == name) return f.make;
  throw InvalidParameterError("unknown family: " + name);
}

ParamPredicate moment2_gap_predicate(const SpecFamily& a, const SpecFamily& b) {
  return [a, b](const Rational& p) {
    return moment(make_weight(a(p)), 2) > moment(make_weight(b(p)), 2);
  };
}

}  // namespace cvo
