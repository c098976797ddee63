// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frieze_lab/frieze_lab.hpp"

using namespace frieze_lab;
using Q = Rational;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<Q> random_diagonal(std::mt19937& rng, int w) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<Q> a;
  while (static_cast<int>(a.size()) < w) {
    const int p = num(rng);
    if (p != 0) a.emplace_back(p, den(rng));
  }
  return a;
}

// Random diagonals that produce a frieze without zero entries.
std::vector<std::pair<std::vector<Q>, FriezePattern<Q>>> random_friezes(std::mt19937& rng, int w, int count) {
  std::vector<std::pair<std::vector<Q>, FriezePattern<Q>>> out;
  while (static_cast<int>(out.size()) < count) {
    auto a = random_diagonal(rng, w);
    try {
      out.emplace_back(a, diagonal_to_frieze(a));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroEntryEncountered) throw;
    }
  }
  return out;
}

// Product of [[c, -1], [1, 0]] over one period, written out on plain
// Rational entries.
std::array<Q, 4> hand_monodromy(const std::vector<Q>& c) {
  std::array<Q, 4> m{Q(1), Q(0), Q(0), Q(1)};
  for (const auto& ci : c) {
    m = {ci * m[0] - m[2], ci * m[1] - m[3], m[0], m[1]};
  }
  return m;
}

bool is_minus_identity(const std::array<Q, 4>& m) {
  return m[0] == Q(-1) && m[1] == Q(0) && m[2] == Q(0) && m[3] == Q(-1);
}

Outcome criterion1() {
  std::mt19937 rng(20);
  int failures = 0, checked = 0;
  for (int w = 1; w <= 5; ++w) {
    for (auto& [a, F] : random_friezes(rng, w, 20)) {
      ++checked;
      const int n = F.period();
      bool ok = n == w + 3;
      for (int r = 0; r <= w + 1; ++r) {
        for (int j = 0; j < n; ++j) {
          ok = ok && F.at(r, j) * F.at(r, j + 1) - F.at(r - 1, j + 1) * F.at(r + 1, j) == Q(1);
          ok = ok && F.at(r, j) == F.at(w + 1 - r, j + r + 1);
          ok = ok && F.at(r, j) == F.at(r, j + n);
        }
      }
      ok = ok && check_period(F);
      // Closure and monodromy, then a perturbed quiddity that must break both.
      auto c = F.quiddity();
      ok = ok && is_minus_identity(hand_monodromy(c)) && is_closed(DiscreteHillEquation<Q>{c});
      c[0] += Q(1);
      const bool hand_closed = is_minus_identity(hand_monodromy(c));
      ok = ok && hand_closed == is_closed(DiscreteHillEquation<Q>{c});
      try {
        propagate_from_quiddity(c);
        ok = ok && hand_closed;
      } catch (const Error& e) {
        // A zero entry stops propagation before closure can be decided.
        if (e.kind() == ErrorKind::NotClosed) ok = ok && !hand_closed;
      }
      auto P = polygon_from_frieze(F);
      const auto& last = P.vertices.back();
      for (int i = 1; i <= w; ++i) {
        const auto& v = P[static_cast<std::size_t>(i)];
        ok = ok && last.x * v.y - last.y * v.x == a[static_cast<std::size_t>(i - 1)];
      }
      if (!ok) ++failures;
    }
  }
  return {failures == 0, std::to_string(checked) + " friezes, " + std::to_string(failures) + " failing"};
}

Outcome criterion2() {
  std::mt19937 rng(21);
  long long paths = 0, mismatches = 0;
  for (int w = 1; w <= 5; ++w) {
    for (auto& [a, F] : random_friezes(rng, w, 3)) {
      auto xi = random_diagonal(rng, w), eta = random_diagonal(rng, w);
      ZigzagCoords<Q> diag{ZigzagPath::diagonal(w), a};
      const Q expected = omega_diagonal(a, xi, eta);
      for (int start = 0; start < w + 3; ++start) {
        for (const auto& p : ZigzagPath::all(w, start)) {
          ++paths;
          auto z = read_zigzag(F, p);
          if (omega_zigzag(z, pushforward(diag, p, xi), pushforward(diag, p, eta)) != expected) ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(paths) + " paths, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion3() {
  std::mt19937 rng(22);
  std::ostringstream ss;
  bool ok = true;
  for (int w = 1; w <= 6; ++w) {
    const int expected = w % 2 == 0 ? w : w - 1;
    int got = -1;
    for (int k = 0; k < 5; ++k) {
      got = omega_rank(random_diagonal(rng, w));
      ok = ok && got == expected;
    }
    ss << (w > 1 ? " " : "") << "w" << w << "->" << got;
  }
  return {ok, ss.str()};
}

Outcome criterion4() {
  auto S = frieze_from_curve(lift_curve(ProjectiveCurve::tan_family(0.0)));
  double sine = 0.0;
  for (int i = 0; i < 64; ++i) {
    for (int j = 0; j < 64; ++j) {
      const double x = pi * i / 64, y = pi * j / 64;
      sine = std::max(sine, std::abs(S.value(x, y) - std::sin(y - x)));
    }
  }
  auto rect = FriezeDomain::rectangle(1, 2, 1, 2);
  const double t = 0.3;
  const double affine = liouville_residual(frieze_from_function([](double x, double y) { return 1 + x * y; }), rect);
  const double powers = liouville_residual(
      frieze_from_function([t](double x, double y) { return std::pow(x * y, t) + std::pow(x * y, 1 - t); }), rect);
  const double normalized = liouville_residual(frieze_from_function([t](double x, double y) {
                                                 return (std::pow(x * y, t) + std::pow(x * y, 1 - t)) / (1 - 2 * t);
                                               }),
                                               rect);
  auto lin = frieze_from_curve(lift_curve(ProjectiveCurve::linear()));
  double linear = 0.0;
  for (double x : {-0.5, 0.3, 1.1}) {
    for (double d : {0.2, 0.7, 1.5}) linear = std::max(linear, std::abs(lin.value(x, x + d) - d));
  }
  const double curv = curvature_conformal(lin, FriezeDomain::band(0, 1, 0.25, 1.25), 64, 1e-4).max_deviation;
  const bool ok = sine < 1e-12 && affine < 1e-8 && powers < 1e-8 && linear < 1e-12 && curv < 1e-6;
  return {ok, "sin " + fmt("%.1e", sine) + ", 1+xy " + fmt("%.1e", affine) + ", (xy)^t+(xy)^(1-t) " +
                  fmt("%.3g", powers) + " [divided by (1-2t): " + fmt("%.1e", normalized) + "], y-x " +
                  fmt("%.1e", linear) + ", |K+1| " + fmt("%.1e", curv)};
}

// S(tan(x + s sin 2x)) = 2 phi'^2 + S(phi), phi = x + s sin 2x, by hand.
double schwarzian_tan_family(double s, double x) {
  const double p1 = 1 + 2 * s * std::cos(2 * x);
  const double p2 = -4 * s * std::sin(2 * x);
  const double p3 = -8 * s * std::cos(2 * x);
  return 2 * p1 * p1 + p3 / p1 - 1.5 * (p2 / p1) * (p2 / p1);
}

Outcome criterion5() {
  const double c = 0.5;
  double liou = 0.0, bound = 0.0, spread = 0.0, match = 0.0;
  for (double s : {0.0, 0.1, 0.3}) {
    auto F = frieze_from_curve(lift_curve(ProjectiveCurve::tan_family(s)));
    liou = std::max(liou, liouville_residual(F, default_domain(F)));
    bound = std::max(bound, boundary_check(F, pi).worst());
    for (int i = 0; i < 64; ++i) {
      const double x = pi * (i + 0.5) / 64;
      auto p = potential_from_frieze(F, x);
      spread = std::max(spread, p.spread);
      match = std::max(match, std::abs(-2 * c * p.kappa - c * schwarzian_tan_family(s, x)));
    }
  }
  const bool ok = liou < 1e-8 && bound < 1e-8 && spread < 1e-6 && match < 1e-6;
  return {ok, "liouville " + fmt("%.1e", liou) + ", boundary " + fmt("%.1e", bound) + ", y-spread " +
                  fmt("%.1e", spread) + ", |k - cS| " + fmt("%.1e", match)};
}

Outcome criterion6() {
  double worst = 0.0;
  for (double s : {0.0, 0.1, 0.3}) {
    auto F = frieze_from_curve(lift_curve(ProjectiveCurve::tan_family(s)));
    worst = std::max(worst, curvature_conformal(F, default_domain(F), 64, 1e-3).max_deviation);
  }
  return {worst < 1e-4, "max |K+1| " + fmt("%.1e", worst) + " at h = 1e-3"};
}

SmoothFunction fn(Series (*g)(const Series&)) { return SmoothFunction::from(g); }

SmoothFunction field_a() {
  return fn([](const Series& x) {
    Series s2 = sin(Series(2.0) * x), c1 = cos(x);
    return sin(Series(4.0) * x) + Series(1.0 / 3.0) * s2 * s2 * c1 * c1;
  });
}
SmoothFunction field_b() {
  return fn([](const Series& x) { return sin(Series(6.0) * x) * cos(Series(2.0) * x) + sin(x) * sin(x); });
}
SmoothFunction field_c() {
  return fn([](const Series& x) { return sin(Series(4.0) * x) + Series(0.25) * cos(Series(2.0) * x); });
}
SmoothFunction field_d() {
  return fn([](const Series& x) { return cos(Series(6.0) * x) + Series(0.5) * sin(Series(2.0) * x); });
}

Outcome criterion7() {
  const double c = 0.5;
  auto curve = ProjectiveCurve::tan_family(0.2);
  auto lines = kirillov_form_fields(hill_potential(curve, c), field_c(), field_d(), pi);
  const double line_gap = std::abs(lines.line1 - lines.line2);

  // Fields with a zero at the pole of f keep the curve integrand smooth.
  auto base_curve = ProjectiveCurve::tan_family(0.1);
  auto X = fn([](const Series& s) { return sin(Series(2.0) * s) * sin(Series(4.0) * s); });
  auto Y = fn([](const Series& s) { return sin(Series(2.0) * s) * (cos(Series(6.0) * s) + Series(0.3)); });
  auto xi = variation_from_field(base_curve, X), eta = variation_from_field(base_curve, Y);
  const double before = kirillov_form_curve(base_curve, xi, eta, c);
  auto h = fn([](const Series& s) { return s + Series(0.15) * sin(Series(2.0) * s); });
  const double after = kirillov_form_curve(base_curve.reparameterized(h), xi.compose(h), eta.compose(h), c);
  const double reparam = std::abs(after - before);

  auto chart = curve.with_pole_at(0.0);
  auto G = lift_curve(chart);
  auto Xg = gauge_fix_field(G, field_a()), Yg = gauge_fix_field(G, field_b());
  const double I = continuum_integral(G, tangent_lift(G, Xg), tangent_lift(G, Yg));
  const double K = kirillov_form_curve(chart, variation_from_field(chart, Xg), variation_from_field(chart, Yg), c);
  const double bridge = std::abs(I + K / (4 * c));

  const bool ok = line_gap < 1e-8 && reparam < 1e-6 && bridge < 1e-8;
  return {ok, "line gap " + fmt("%.1e", line_gap) + ", reparameterization " + fmt("%.1e", reparam) +
                  ", |I + K/4c| " + fmt("%.1e", bridge)};
}

Outcome criterion8() {
  const double c = 0.5;
  auto curve = ProjectiveCurve::tan_family(0.2);
  bool ok = true;
  std::ostringstream ss;
  auto sin2 = fn([](const Series& x) { return sin(Series(2.0) * x); });
  auto cos4 = fn([](const Series& x) { return cos(Series(4.0) * x); });
  const std::vector<std::pair<SmoothFunction, SmoothFunction>> pairs{{field_a(), field_b()}, {sin2, cos4}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto rep = convergence_study(curve, pairs[k].first, pairs[k].second, c, {100, 200, 400, 800});
    bool monotone = rep.records.size() == 4;
    for (std::size_t i = 1; i < rep.records.size(); ++i) {
      monotone = monotone && rep.records[i].err_integral < rep.records[i - 1].err_integral;
    }
    const double rel = rep.records.back().err_integral / std::abs(rep.integral);
    const double gap = std::abs(rep.integral - rep.kirillov_scaled);
    ok = ok && monotone && rel < 1e-2 && gap < 1e-8;
    ss << (k ? "; " : "") << "pair " << k + 1 << ": monotone " << (monotone ? "yes" : "no") << ", final rel "
       << fmt("%.1e", rel) << ", |I + omega_K/4c| " << fmt("%.1e", gap) << ", order "
       << fmt("%.2f", rep.records.back().observed_order);
  }
  return {ok, ss.str()};
}

Outcome criterion9() {
  auto S_lin = schwarzian(SmoothFunction::identity());
  auto S_tan = curve_schwarzian(ProjectiveCurve::tan_family(0.0));
  const double c = 0.5, T = pi;
  double lin = 0.0, tan_dev = 0.0;
  for (double x : {-1.0, 0.1, 0.5, 1.2, pi / 2, 2.5}) {
    lin = std::max(lin, std::abs(S_lin.value(x)));
    tan_dev = std::max(tan_dev, std::abs(c * S_tan.value(x) - 2 * c * pi * pi / (T * T)));
  }
  auto f = fn([](const Series& s) { return exp(s) + Series(0.3) * s; });
  auto g = f.map([](const Series& u) { return (Series(2.0) * u + Series(1.0)) / (u + Series(1.0)); });
  auto Sf = schwarzian(f), Sg = schwarzian(g);
  Mat2<double> M;
  M.m = {{{2.0, 1.0}, {1.0, 1.0}}};
  auto cv = ProjectiveCurve::tan_family(0.2);
  auto S0 = curve_schwarzian(cv), S1 = curve_schwarzian(cv.transformed(M));
  double moebius = 0.0;
  for (double x : {-0.5, 0.0, 0.7, 1.5}) moebius = std::max(moebius, std::abs(Sf.value(x) - Sg.value(x)));
  for (double x : {0.0, 0.4, 1.9, 3.0}) moebius = std::max(moebius, std::abs(S0.value(x) - S1.value(x)));
  const bool ok = lin < 1e-12 && tan_dev < 1e-10 && moebius < 1e-10;
  return {ok, "S(x) " + fmt("%.1e", lin) + ", |cS(tan) - 2c pi^2/T^2| " + fmt("%.1e", tan_dev) + ", Moebius " +
                  fmt("%.1e", moebius)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double budget;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{{1, 10, criterion1}, {2, 30, criterion2}, {3, 0, criterion3},
                                        {4, 0, criterion4},  {5, 0, criterion5},  {6, 0, criterion6},
                                        {7, 0, criterion7},  {8, 60, criterion8}, {9, 0, criterion9}};
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget > 0 && secs >= c.budget) {
      o.pass = false;
      o.detail += ", over the time budget";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s (%s; %.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 3;
}
