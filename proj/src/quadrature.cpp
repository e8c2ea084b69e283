#include "cvo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cvo {

namespace {

// Gauss-Kronrod 7-15 pair on [-1,1] (positive half; nodes are symmetric).
// Odd-index nodes are the embedded Gauss-7 points.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
  double a, b, value, error;
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double result_k = kWgk[7] * fc;
  double result_g = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double x = h * kXgk[i];
    double sum = f(c - x) + f(c + x);
    result_k += kWgk[i] * sum;
    if (i % 2 == 1) result_g += kWg[i / 2] * sum;
  }
  return {a, b, result_k * h, std::abs(result_k - result_g) * h};
}

QuadratureResult adaptive(const std::function<double(double)>& f, double lo,
                          double hi, double tol,
                          const std::vector<double>& split_points) {
  constexpr int kMaxSegments = 20000;
  std::vector<double> cuts{lo};
  for (double s : split_points)
    if (s > lo && s < hi) cuts.push_back(s);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total_len = hi - lo;
  std::vector<Segment> work, done;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    work.push_back(gk15(f, cuts[i], cuts[i + 1]));

  int subdivisions = 0;
  while (!work.empty()) {
    Segment s = work.back();
    work.pop_back();
    // Per-segment budget proportional to length; floor keeps zero-length
    // tolerance requests from looping forever on roundoff noise.
    double budget = std::max(tol * (s.b - s.a) / total_len, 1e-300);
    if (s.error <= budget || s.error <= 1e-16 * std::abs(s.value)) {
      done.push_back(s);
      continue;
    }
    if (static_cast<int>(work.size() + done.size()) >= kMaxSegments)
      throw ToleranceNotMetError("integrate: subdivision budget exhausted");
    double m = 0.5 * (s.a + s.b);
    if (!(m > s.a && m < s.b)) {  // interval at roundoff resolution
      done.push_back(s);
      continue;
    }
    ++subdivisions;
    work.push_back(gk15(f, s.a, m));
    work.push_back(gk15(f, m, s.b));
  }
  QuadratureResult r;
  r.subdivisions = subdivisions;
  for (const Segment& s : done) {
    r.value += s.value;
    r.error_estimate += s.error;
  }
  return r;
}

}  // namespace

TestFunction TestFunction::hinge(double c) {
  TestFunction f;
  f.kind = Kind::Hinge;
  f.eval = [c](double t) { return t > c ? t - c : 0.0; };
  f.kinks = {c};
  return f;
}

TestFunction TestFunction::power(int p) {
  if (p < 0) throw InvalidParameterError("power: exponent must be >= 0");
  TestFunction f;
  f.kind = Kind::Power;
  f.eval = [p](double t) { return std::pow(t, p); };
  return f;
}

TestFunction TestFunction::exponential(double lambda) {
  TestFunction f;
  f.kind = Kind::Exponential;
  f.eval = [lambda](double t) { return std::exp(lambda * t); };
  return f;
}

TestFunction TestFunction::piecewise_linear_convex(std::vector<double> knots,
                                                   std::vector<double> slopes,
                                                   double value_at_0) {
  if (slopes.size() != knots.size() + 1)
    throw InvalidParameterError("piecewise linear: need one more slope than knots");
  for (size_t i = 0; i + 1 < knots.size(); ++i)
    if (!(knots[i] < knots[i + 1]))
      throw InvalidParameterError("piecewise linear: knots must increase");
  for (size_t i = 0; i + 1 < slopes.size(); ++i)
    if (slopes[i] > slopes[i + 1])
      throw InvalidParameterError("piecewise linear: slopes must be nondecreasing");
  // Values at the knots, accumulated from 0.
  std::vector<double> knot_values(knots.size());
  double v = value_at_0, prev = 0.0;
  for (size_t i = 0; i < knots.size(); ++i) {
    v += slopes[i] * (knots[i] - prev);
    knot_values[i] = v;
    prev = knots[i];
  }
  TestFunction f;
  f.kind = Kind::PiecewiseLinearConvex;
  f.kinks = knots;
  f.eval = [knots, slopes, knot_values, value_at_0](double t) {
    size_t i = std::upper_bound(knots.begin(), knots.end(), t) - knots.begin();
    double base_t = i == 0 ? 0.0 : knots[i - 1];
    double base_v = i == 0 ? value_at_0 : knot_values[i - 1];
    return base_v + slopes[i] * (t - base_t);
  };
  return f;
}

TestFunction TestFunction::affine(double beta, double delta) {
  TestFunction f;
  f.kind = Kind::Affine;
  f.eval = [beta, delta](double t) { return beta * t + delta; };
  return f;
}

TestFunction TestFunction::from_poly(const Poly& p) {
  TestFunction f;
  f.kind = Kind::Polynomial;
  f.eval = [p](double t) { return p.eval_double(t); };
  return f;
}

TestFunction TestFunction::reparameterized(double x, double y) const {
  TestFunction g;
  g.kind = Kind::Reparam;
  auto base = eval;
  double len = y - x;
  g.eval = [base, x, len](double t) { return base(x + t * len); };
  for (double k : kinks) g.kinks.push_back((k - x) / len);
  return g;
}

QuadratureResult integrate(const TestFunction& f, double lo, double hi,
                           double tol) {
  if (!(lo < hi)) throw PreconditionError("integrate: lo must be < hi");
  if (!(tol > 0)) throw PreconditionError("integrate: tol must be positive");
  return adaptive(f.eval, lo, hi, tol, f.kinks);
}

QuadratureResult stieltjes_numeric(const TestFunction& f,
                                   const CumulativeFunction& F, double tol) {
  if (!(tol > 0)) throw PreconditionError("stieltjes_numeric: tol must be positive");
  QuadratureResult total;
  const auto& breaks = F.breakpoints();
  for (size_t i = 0; i < F.pieces().size(); ++i) {
    Poly density = F.pieces()[i].derivative();
    if (density.is_zero()) continue;
    double a = breaks[i].get_d(), b = breaks[i + 1].get_d();
    auto integrand = [&f, &density](double t) {
      return f(t) * density.eval_double(t);
    };
    QuadratureResult piece =
        adaptive(integrand, a, b, tol * (b - a), f.kinks);
    total.value += piece.value;
    total.error_estimate += piece.error_estimate;
    total.subdivisions += piece.subdivisions;
  }
  for (const Atom& atom : F.atoms())
    total.value += f(atom.location.get_d()) * atom.mass.get_d();
  return total;
}

QuadratureResult double_average_direct(const TestFunction& f, double x,
                                       double y, double tol,
                                       DoubleAverageMode mode) {
  if (!(x < y)) throw PreconditionError("double_average_direct: x must be < y");
  TestFunction phi = f.reparameterized(x, y);
  if (mode == DoubleAverageMode::TentWeight) {
    // (s+t)/2 with s,t uniform on [0,1] has the triangular density
    // 4u on [0,1/2], 4(1-u) on [1/2,1].
    auto integrand = [&phi](double u) {
      double w = u <= 0.5 ? 4.0 * u : 4.0 * (1.0 - u);
      return phi(u) * w;
    };
    std::vector<double> cuts = phi.kinks;
    cuts.push_back(0.5);
    return adaptive(integrand, 0.0, 1.0, tol, cuts);
  }
  // Nested tensor evaluation of the unit-square average of phi((u+v)/2).
  auto inner = [&phi, tol](double u) {
    std::vector<double> cuts;
    for (double k : phi.kinks) cuts.push_back(2.0 * k - u);
    return adaptive([&phi, u](double v) { return phi(0.5 * (u + v)); }, 0.0,
                    1.0, tol * 0.1, cuts)
        .value;
  };
  std::vector<double> outer_cuts;
  for (double k : phi.kinks) {
    outer_cuts.push_back(2.0 * k - 1.0);
    outer_cuts.push_back(2.0 * k);
  }
  return adaptive(inner, 0.0, 1.0, tol, outer_cuts);
}

double second_antiderivative(const TestFunction& f, double base, double t,
                             double tol) {
  if (t == base) return 0.0;
  auto F = [&f, base, tol](double s) {
    if (s == base) return 0.0;
    double lo = std::min(base, s), hi = std::max(base, s);
    double v = adaptive(f.eval, lo, hi, tol * 0.05, f.kinks).value;
    return s >= base ? v : -v;
  };
  double lo = std::min(base, t), hi = std::max(base, t);
  double v = adaptive(F, lo, hi, tol, f.kinks).value;
  return t >= base ? v : -v;
}

FunctionalNumeric functional_numeric(const FunctionalSpec& spec,
                                     const TestFunction& f, double x, double y,
                                     double tol) {
  if (!(x < y)) throw PreconditionError("functional_numeric: x must be < y");
  spec.validate();
  TestFunction phi = f.reparameterized(x, y);
  FunctionalNumeric out;
  out.primary = stieltjes_numeric(phi, make_weight(spec), tol);
  if (spec.kind == FunctionalSpec::Kind::T) {
    // Cross-check through numeric antiderivatives on the original interval.
    double a = spec.param.get_d();
    double len = y - x;
    double mid = 0.5 * (x + y);
    double F_y = adaptive(f.eval, x, y, tol * 0.1, f.kinks).value;
    double Phi_mid = second_antiderivative(f, x, mid, tol * 0.1);
    double Phi_y = second_antiderivative(f, x, y, tol * 0.1);
    out.secondary = (1.0 - 0.5 * a) * F_y / len +
                    2.0 * a * (-2.0 * Phi_mid + Phi_y) / (len * len);
  }
  return out;
}

TestFunction random_convex(uint64_t seed, int knot_count) {
  if (knot_count < 0)
    throw PreconditionError("random_convex: knot_count must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> slope(-3.0, 3.0);
  std::vector<double> knots(knot_count);
  for (double& k : knots) k = unit(rng);
  std::sort(knots.begin(), knots.end());
  // Collisions would make knots non-strict; nudge apart deterministically.
  for (size_t i = 1; i < knots.size(); ++i)
    if (knots[i] <= knots[i - 1]) knots[i] = std::nextafter(knots[i - 1], 1.0);
  std::vector<double> slopes(knot_count + 1);
  for (double& s : slopes) s = slope(rng);
  std::sort(slopes.begin(), slopes.end());
  double value_at_0 = slope(rng) / 3.0;
  return TestFunction::piecewise_linear_convex(std::move(knots),
                                               std::move(slopes), value_at_0);
}

}  // namespace cvo
