#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cvo/harness.hpp"
#include "cvo/kernels.hpp"
#include "json.hpp"

namespace {

using namespace cvo;

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw IoError("cannot open for writing: " + path);
  return file;
}

void print_compare(const FunctionalSpec& a, const FunctionalSpec& b,
                   const Verdict& v, const std::optional<std::string>& ohlin,
                   ReportFormat format, std::ostream& os) {
  switch (format) {
    case ReportFormat::Text:
      os << "left:     " << a.to_string() << "\n"
         << "right:    " << b.to_string() << "\n"
         << "relation: " << to_string(v.relation) << "\n"
         << "checks:   endpoint=" << (v.endpoint_check ? "ok" : "FAIL")
         << " mean=" << (v.mean_check ? "ok" : "FAIL")
         << " gap=" << to_string(v.gap_sign) << "\n";
      if (v.witnesses) {
        os << "witness+: G(" << to_string(v.witnesses->plus_location)
           << ") = " << to_string(v.witnesses->plus_gap) << "\n"
           << "witness-: G(" << to_string(v.witnesses->minus_location)
           << ") = " << to_string(v.witnesses->minus_gap) << "\n";
      }
      if (ohlin) os << "ohlin:    " << *ohlin << "\n";
      break;
    case ReportFormat::Csv:
      os << "left,right,relation,endpoint_check,mean_check,gap_sign\n"
         << a.to_string() << "," << b.to_string() << ","
         << to_string(v.relation) << "," << v.endpoint_check << ","
         << v.mean_check << "," << to_string(v.gap_sign) << "\n";
      break;
    case ReportFormat::Json: {
      nlohmann::json j;
      j["left"] = a.to_string();
      j["right"] = b.to_string();
      j["left_weight"] = nlohmann::json::parse(make_weight(a).to_json());
      j["right_weight"] = nlohmann::json::parse(make_weight(b).to_json());
      j["relation"] = to_string(v.relation);
      j["endpoint_check"] = v.endpoint_check;
      j["mean_check"] = v.mean_check;
      j["gap_sign"] = to_string(v.gap_sign);
      if (v.witnesses) {
        j["witnesses"] = {
            {"plus_location", to_string(v.witnesses->plus_location)},
            {"minus_location", to_string(v.witnesses->minus_location)},
            {"plus_gap", to_string(v.witnesses->plus_gap)},
            {"minus_gap", to_string(v.witnesses->minus_gap)}};
      }
      if (ohlin) j["ohlin"] = *ohlin;
      os << j.dump(2) << "\n";
      break;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact convex-order comparison of quadrature-type functionals"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand too

  std::string format_name = "text";
  std::string tol_text = "1e-9";
  uint64_t seed = 42;
  app.add_option("--format", format_name, "output format: text, csv or json")
      ->capture_default_str();
  app.add_option("--tol", tol_text,
                 "tolerance (exact rational or decimal, e.g. 1e-9)")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized numeric cross-checks")
      ->capture_default_str();

  auto* cmd_compare = app.add_subcommand(
      "compare", "decide the convex-order relation between two weights");
  std::string spec_a, spec_b, out_path;
  int check_random = 0;
  cmd_compare->add_option("specA", spec_a, "left functional")->required();
  cmd_compare->add_option("specB", spec_b, "right functional")->required();
  cmd_compare->add_option("--out", out_path, "write to file instead of stdout");
  cmd_compare->add_option(
      "--check-random", check_random,
      "validate numerically with this many random convex functions");

  auto* cmd_suite = app.add_subcommand(
      "suite", "run every catalogued claim; exit 0 iff all pass");
  std::string suite_out, regime_out;
  cmd_suite->add_option("--out", suite_out, "write to file instead of stdout");
  cmd_suite->add_option("--regime-out", regime_out,
                        "also write the parameter-sweep table (CSV) here");

  auto* cmd_threshold = app.add_subcommand(
      "threshold", "bisect for the parameter where a verdict flips");
  std::string family_name, target_text, dir_text, lo_text, hi_text;
  std::string predicate_name = "verdict";
  cmd_threshold->add_option("family", family_name, "parameterized family name")
      ->required();
  cmd_threshold
      ->add_option("target", target_text,
                   "fixed functional spec, or a family name evaluated at the "
                   "same parameter")
      ->required();
  cmd_threshold->add_option("dir", dir_text, "LE or GE (family vs target)")
      ->required();
  cmd_threshold->add_option("lo", lo_text, "bracket start")->required();
  cmd_threshold->add_option("hi", hi_text, "bracket end")->required();
  cmd_threshold
      ->add_option("--predicate", predicate_name,
                   "verdict (default) or moment2 (second-moment comparison)")
      ->capture_default_str();

  auto* cmd_sample = app.add_subcommand(
      "sample-g", "CSV samples of the primitive gap G of specB - specA");
  std::string g_a, g_b, g_out;
  int g_points = 1024;
  cmd_sample->add_option("specA", g_a, "left functional")->required();
  cmd_sample->add_option("specB", g_b, "right functional")->required();
  cmd_sample->add_option("--points", g_points, "grid size")
      ->capture_default_str();
  cmd_sample->add_option("--out", g_out, "write to file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    ReportFormat format = format_from_string(format_name);

    if (*cmd_compare) {
      FunctionalSpec a = FunctionalSpec::parse(spec_a);
      FunctionalSpec b = FunctionalSpec::parse(spec_b);
      CumulativeFunction Fa = make_weight(a), Fb = make_weight(b);
      Verdict v = levin_stechkin_compare(Fa, Fb);
      std::optional<std::string> ohlin_note;
      try {
        auto dir = ohlin_compare(Fa, Fb);
        if (!dir)
          ohlin_note = "inconclusive (crossing count is not one)";
        else
          ohlin_note = *dir == Direction::FirstLeSecond
                           ? "first <= second (single crossing)"
                           : "second <= first (single crossing)";
      } catch (const PreconditionError& e) {
        ohlin_note = std::string("not applicable: ") + e.what();
      }
      std::ofstream file;
      std::ostream& os = open_sink(out_path, file);
      print_compare(a, b, v, ohlin_note, format, os);
      if (check_random > 0) {
        std::vector<TestFunction> fs;
        fs.reserve(check_random);
        for (int i = 0; i < check_random; ++i)
          fs.push_back(random_convex(seed + i, 6));
        auto gaps =
            numeric_gap_batch(Fa, Fb, fs, to_double(parse_rational(tol_text)));
        double lo_gap = gaps[0], hi_gap = gaps[0];
        for (double g : gaps) {
          lo_gap = std::min(lo_gap, g);
          hi_gap = std::max(hi_gap, g);
        }
        os << "numeric gap over " << check_random
           << " random convex functions: min " << lo_gap << ", max " << hi_gap
           << "\n";
      }
      return 0;
    }

    if (*cmd_suite) {
      SuiteResult result = run_theorem_suite();
      if (suite_out.empty())
        emit_report(result, format, std::cout);
      else
        emit_report(result, format, suite_out);
      if (!regime_out.empty()) {
        std::vector<Rational> grid;
        for (long a : {-10L, -6L, -2L, 0L, 1L, 2L, 4L, 6L, 8L})
          grid.push_back(Rational(a));
        RegimeReport rep = sweep_regimes(
            "T", family_from_name("T"),
            {{"uniform", FunctionalSpec::uniform()},
             {"mid", FunctionalSpec::midpoint()},
             {"trap", FunctionalSpec::trapezoid()}},
            grid);
        emit_report(rep, ReportFormat::Csv, regime_out);
      }
      return result.all_pass() ? 0 : 1;
    }

    if (*cmd_threshold) {
      Rational lo = parse_rational(lo_text);
      Rational hi = parse_rational(hi_text);
      Rational tol = parse_rational(tol_text);
      SpecFamily family = family_from_name(family_name);
      ThresholdResult result;
      if (predicate_name == "moment2") {
        result = find_threshold(
            moment2_gap_predicate(family, family_from_name(target_text)), lo,
            hi, tol);
      } else if (predicate_name == "verdict") {
        ThresholdDir dir;
        if (dir_text == "LE")
          dir = ThresholdDir::LE;
        else if (dir_text == "GE")
          dir = ThresholdDir::GE;
        else
          throw InvalidParameterError("dir must be LE or GE");
        bool target_is_family = false;
        for (const NamedFamily& f : named_families())
          if (f.name == target_text) target_is_family = true;
        if (target_is_family) {
          SpecFamily target = family_from_name(target_text);
          auto pred = [&](const Rational& p) {
            return verdict_holds(
                levin_stechkin_compare(make_weight(family(p)),
                                       make_weight(target(p))),
                dir);
          };
          result = find_threshold(pred, lo, hi, tol);
        } else {
          result = find_threshold(family, FunctionalSpec::parse(target_text),
                                  dir, lo, hi, tol);
        }
      } else {
        throw InvalidParameterError("unknown predicate: " + predicate_name);
      }
      emit_report(result, format, std::cout);
      return 0;
    }

    if (*cmd_sample) {
      CumulativeFunction Fa = make_weight(FunctionalSpec::parse(g_a));
      CumulativeFunction Fb = make_weight(FunctionalSpec::parse(g_b));
      std::ofstream file;
      std::ostream& os = open_sink(g_out, file);
      emit_gap_samples(Fa, Fb, g_points, os);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
