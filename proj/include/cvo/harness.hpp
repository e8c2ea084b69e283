#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cvo/catalog.hpp"
#include "cvo/convex_order.hpp"

namespace cvo {

struct Claim {
  std::string id;
  FunctionalSpec left, right;
  Relation expected;
  bool operator==(const Claim&) const = default;
};

struct ClaimResult {
  Claim claim;
  Verdict verdict;
  bool pass = false;
  bool operator==(const ClaimResult&) const = default;
};

struct SuiteResult {
  std::vector<ClaimResult> rows;
  bool all_pass() const;
  bool operator==(const SuiteResult&) const = default;
};

// Every catalogued inequality, sharp constant boundary case, and
// incomparability claim, evaluated through exact verdicts. Deterministic.
SuiteResult run_theorem_suite();

// An Equal verdict satisfies both directions (the claims are non-strict).
enum class ThresholdDir { LE, GE };
bool verdict_holds(const Verdict& v, ThresholdDir dir);

using ParamPredicate = std::function<bool(const Rational&)>;
using SpecFamily = std::function<FunctionalSpec(const Rational&)>;

struct ThresholdResult {
  Rational lo, hi;   // bracket, predicate differs at the two ends
  Rational value;    // the endpoint where the predicate holds
  bool exact;        // certification probes never crossed past `value`
  int probes;        // number of exact predicate evaluations
};

// Locate the predicate flip inside [lo, hi] by exact-rational bisection.
// Alongside midpoint probes, the simplest rational in the bracket is
// probed, so flips at rationals of moderate denominator are found exactly
// (reported in `value` with exact = true); other flips come back as a
// bracket of width <= tol. Throws NoBracketError when the predicate
// agrees at both endpoints.
ThresholdResult find_threshold(const ParamPredicate& pred, Rational lo,
                               Rational hi, const Rational& tol);

// Specialization: the parameterized weight family against a fixed target,
// predicate = "family(p) dir target holds".
ThresholdResult find_threshold(const SpecFamily& family,
                               const FunctionalSpec& target, ThresholdDir dir,
                               const Rational& lo, const Rational& hi,
                               const Rational& tol);

// Parameter sweep of a family against several targets with flip brackets
// between consecutive grid points.
struct RegimeBracket {
  std::string target;
  Rational lo, hi;
};
struct RegimeReport {
  std::string family_name;
  std::vector<std::string> target_names;
  std::vector<Rational> grid;                 // strictly increasing
  std::vector<std::vector<Verdict>> verdicts; // [grid index][target index]
  std::vector<RegimeBracket> flip_brackets;
};
RegimeReport sweep_regimes(
    const std::string& family_name, const SpecFamily& family,
    const std::vector<std::pair<std::string, FunctionalSpec>>& targets,
    const std::vector<Rational>& grid);

enum class ReportFormat { Text, Csv, Json };
ReportFormat format_from_string(const std::string& s);

void emit_report(const SuiteResult& result, ReportFormat format, std::ostream& os);
void emit_report(const RegimeReport& report, ReportFormat format, std::ostream& os);
void emit_report(const ThresholdResult& result, ReportFormat format, std::ostream& os);
// File variants; throw IoError when the path cannot be written.
void emit_report(const SuiteResult& result, ReportFormat format, const std::string& path);
void emit_report(const RegimeReport& report, ReportFormat format, const std::string& path);

// CSV plot data ("x,G") of the primitive gap of F2 - F1 on an evenly
// spaced grid.
void emit_gap_samples(const CumulativeFunction& F1, const CumulativeFunction& F2,
                      int points, std::ostream& os);

// Inverse of the Json emitter, for round-trip checks.
SuiteResult parse_suite_result_json(const std::string& text);

Relation relation_from_string(const std::string& s);

// Named one-parameter families accepted by the CLI threshold command.
struct NamedFamily {
  std::string name;
  std::string description;
  SpecFamily make;
};
const std::vector<NamedFamily>& named_families();
SpecFamily family_from_name(const std::string& name);

// Predicate comparing second moments of two families at the same
// parameter (used to bracket where moment evidence flips).
ParamPredicate moment2_gap_predicate(const SpecFamily& a, const SpecFamily& b);

}  // namespace cvo
