#pragma once

// Continuous side: projective curves and their unit-determinant lifts,
// Schwarzian derivatives, Hill equations, continuous friezes
// F(x, y) = [Gamma(x), Gamma(y)] with Liouville and boundary diagnostics,
// Kirillov's form in two formulations, and the constant-curvature check.
//
// Conventions.
//   * [u, v] = u.x v.y - u.y v.x throughout.
//   * A curve is stored in homogeneous form f = p / q so that the lift
//     Gamma = (q, p) / sqrt(W), W = p' q - p q' = f' q^2, is smooth through
//     the pole of f. Then [Gamma, Gamma'] = 1 and Gamma = (f'^{-1/2}, f f'^{-1/2}).
//   * Internal Hill form: u'' = kappa u, with kappa = [Gamma'', Gamma'] = -S(f)/2.
//     The form 2c y'' + k y = 0 uses k = c S(f) = -2c kappa.
//   * A vector field X on the circle moves f by xi = X f'.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "frieze_lab/error.hpp"
#include "frieze_lab/plane.hpp"
#include "frieze_lab/smooth.hpp"

namespace frieze_lab {

// ---------------------------------------------------------------------------
// Schwarzian

/// S(f) = f'''/f' - (3/2)(f''/f')^2.
inline SmoothFunction schwarzian(const SmoothFunction& f) {
  return SmoothFunction::local([f](double x) {
    Series d1 = f.at(x).shift_derivative();
    if (std::abs(d1[0]) < 1e-14) fail(ErrorKind::DerivativeVanishes, "f' vanishes at x = " + std::to_string(x));
    Series d2 = d1.shift_derivative();
    Series d3 = d2.shift_derivative();
    Series r = d2 / d1;
    return d3 / d1 - Series(1.5) * r * r;
  });
}

// ---------------------------------------------------------------------------
// Projective curves

struct ProjectiveCurve {
  SmoothFunction p;     // f = p / q
  SmoothFunction q;
  double period = 0.0;  // 0 marks an open curve
  std::string name;

  bool closed() const { return period > 0.0; }
  SmoothFunction f() const { return p / q; }
  SmoothFunction f_prime() const { return f().derivative_fn(); }
  /// W = p' q - p q' (equals f' q^2).
  SmoothFunction wronskian() const {
    SmoothFunction pp = p, qq = q;
    return SmoothFunction::local([pp, qq](double x) {
      Series P = pp.at(x), Q = qq.at(x);
      return P.shift_derivative() * Q - P * Q.shift_derivative();
    });
  }

  /// f_s(x) = tan(x + s sin 2x) on T = pi, stored as (sin phi, cos phi).
  static ProjectiveCurve tan_family(double s) {
    auto phi = [s](const Series& x) { return x + Series(s) * sin(Series(2.0) * x); };
    ProjectiveCurve c;
    c.p = SmoothFunction::from([phi](const Series& x) { return sin(phi(x)); });
    c.q = SmoothFunction::from([phi](const Series& x) { return cos(phi(x)); });
    c.period = std::numbers::pi;
    c.name = "tan";
    return c;
  }

  /// f(x) = x, an open curve.
  static ProjectiveCurve linear() {
    ProjectiveCurve c;
    c.p = SmoothFunction::identity();
    c.q = SmoothFunction::constant(1.0);
    c.name = "linear";
    return c;
  }

  static ProjectiveCurve from_function(SmoothFunction f, double period, std::string name = "custom") {
    ProjectiveCurve c;
    c.p = std::move(f);
    c.q = SmoothFunction::constant(1.0);
    c.period = period;
    c.name = std::move(name);
    return c;
  }

  /// Applies a unimodular matrix to the lift: (q, p) -> M (q, p). This is a
  /// Moebius change of f and leaves the projective class unchanged.
  ProjectiveCurve transformed(const Mat2<double>& M) const {
    ProjectiveCurve c = *this;
    c.q = M.m[0][0] * q + M.m[0][1] * p;
    c.p = M.m[1][0] * q + M.m[1][1] * p;
    return c;
  }

  /// Rotates the chart so that f has its pole at x0 (q(x0) = 0, p(x0) > 0).
  ProjectiveCurve with_pole_at(double x0) const {
    const double g1 = q.value(x0), g2 = p.value(x0);
    const double th = std::atan2(g1, g2);
    Mat2<double> R;
    R.m = {{{std::cos(th), -std::sin(th)}, {std::sin(th), std::cos(th)}}};
    return transformed(R);
  }

  /// The curve x -> f(h(x)).
  ProjectiveCurve reparameterized(const SmoothFunction& h) const {
    ProjectiveCurve c = *this;
    c.p = p.compose(h);
    c.q = q.compose(h);
    return c;
  }
};

/// Throws NotAdmissible unless W > 0 on a uniform grid of one period (or of
/// [-1, 1] for open curves).
inline void check_admissible(const ProjectiveCurve& c, int samples = 2048) {
  auto W = c.wronskian();
  const double a = c.closed() ? 0.0 : -1.0;
  const double len = c.closed() ? c.period : 2.0;
  for (int i = 0; i < samples; ++i) {
    const double x = a + len * i / samples;
    const double w = W.value(x);
    if (!(w > 0.0)) {
      fail(ErrorKind::NotAdmissible,
           "derivative positivity violated: f' <= 0 near x = " + std::to_string(x));
    }
  }
}

/// Schwarzian of the curve computed from the lift (no poles): S = -2 kappa.
inline SmoothFunction curve_kappa(const ProjectiveCurve& c);

inline SmoothFunction curve_schwarzian(const ProjectiveCurve& c) { return -2.0 * curve_kappa(c); }

// ---------------------------------------------------------------------------
// Lifts

struct LiftedCurve {
  SmoothFunction g1;
  SmoothFunction g2;
  double period = 0.0;

  Vec2<double> operator()(double x) const { return derivative(x, 0); }
  Vec2<double> derivative(double x, int k) const {
    Series a = g1.at(x), b = g2.at(x);
    return {a.derivative(static_cast<std::size_t>(k)), b.derivative(static_cast<std::size_t>(k))};
  }
  /// Value and first two derivatives in one evaluation.
  std::array<Vec2<double>, 3> jet(double x) const {
    Series a = g1.at(x), b = g2.at(x);
    return {Vec2<double>{a[0], b[0]}, Vec2<double>{a[1], b[1]}, Vec2<double>{2 * a[2], 2 * b[2]}};
  }
};

/// Gamma = (q, p) / sqrt(W) = (f'^{-1/2}, f f'^{-1/2}).
inline LiftedCurve lift_curve(const ProjectiveCurve& c) {
  SmoothFunction p = c.p, q = c.q;
  auto inv_sqrt_w = SmoothFunction::local([p, q](double x) {
    Series P = p.at(x), Q = q.at(x);
    Series W = P.shift_derivative() * Q - P * Q.shift_derivative();
    if (W[0] <= 1e-14) fail(ErrorKind::DerivativeVanishes, "f' vanishes at x = " + std::to_string(x));
    return pow(W, -0.5);
  });
  return LiftedCurve{q * inv_sqrt_w, p * inv_sqrt_w, c.period};
}

inline SmoothFunction curve_kappa(const ProjectiveCurve& c) {
  LiftedCurve L = lift_curve(c);
  return SmoothFunction::local([L](double x) {
    Series a = L.g1.at(x), b = L.g2.at(x);
    Series a1 = a.shift_derivative(), b1 = b.shift_derivative();
    Series a2 = a1.shift_derivative(), b2 = b1.shift_derivative();
    return a2 * b1 - b2 * a1;
  });
}

/// Two-curve lift from explicit component functions.
inline LiftedCurve lifted(SmoothFunction g1, SmoothFunction g2, double period = 0.0) {
  return LiftedCurve{std::move(g1), std::move(g2), period};
}

// ---------------------------------------------------------------------------
// Hill equations

struct HillPotential {
  SmoothFunction kappa;  // internal form u'' = kappa u
  double c = 0.5;        // central constant

  /// Potential of 2c y'' + k y = 0.
  SmoothFunction k() const { return (-2.0 * c) * kappa; }

  static HillPotential from_kappa(SmoothFunction kappa, double c) { return {std::move(kappa), c}; }
  static HillPotential from_k(const SmoothFunction& k, double c) {
    if (c == 0.0) fail(ErrorKind::InvalidArgument, "central constant must be nonzero");
    return {(-1.0 / (2.0 * c)) * k, c};
  }
};

/// k = c S(f), kappa = -S(f)/2.
inline HillPotential hill_potential(const ProjectiveCurve& curve, double c) {
  return HillPotential::from_kappa(curve_kappa(curve), c);
}

struct HillSolution {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> dys;
  Mat2<double> monodromy;  // columns: (u(T), u'(T)) of the basis (1,0), (0,1)

  bool antiperiodic(double tol = 1e-6) const {
    Mat2<double> minus;
    minus.m = {{{-1.0, 0.0}, {0.0, -1.0}}};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (std::abs(monodromy.m[i][j] - minus.m[i][j]) > tol) return false;
      }
    }
    return true;
  }
};

namespace detail {

struct Rk4Path {
  std::vector<double> ys, dys;
};

inline Rk4Path rk4(const std::vector<double>& kappa_nodes, double h, double y0, double dy0, int steps) {
  // kappa_nodes holds kappa at x_0, x_0 + h/2, x_0 + h, ... (2 steps + 1 values).
  Rk4Path out;
  out.ys.reserve(static_cast<std::size_t>(steps) + 1);
  out.dys.reserve(static_cast<std::size_t>(steps) + 1);
  double y = y0, v = dy0;
  out.ys.push_back(y);
  out.dys.push_back(v);
  for (int i = 0; i < steps; ++i) {
    const double k0 = kappa_nodes[static_cast<std::size_t>(2 * i)];
    const double km = kappa_nodes[static_cast<std::size_t>(2 * i + 1)];
    const double k1 = kappa_nodes[static_cast<std::size_t>(2 * i + 2)];
    const double a1y = v, a1v = k0 * y;
    const double a2y = v + 0.5 * h * a1v, a2v = km * (y + 0.5 * h * a1y);
    const double a3y = v + 0.5 * h * a2v, a3v = km * (y + 0.5 * h * a2y);
    const double a4y = v + h * a3v, a4v = k1 * (y + h * a3y);
    y += h / 6.0 * (a1y + 2 * a2y + 2 * a3y + a4y);
    v += h / 6.0 * (a1v + 2 * a2v + 2 * a3v + a4v);
    out.ys.push_back(y);
    out.dys.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Classical RK4 for u'' = kappa u over [0, T] with the given initial data,
/// plus the monodromy from the two basis solutions.
inline HillSolution hill_solve(const HillPotential& pot, double T, double y0, double dy0, int steps) {
  if (steps < 64) fail(ErrorKind::InvalidArgument, "hill_solve needs at least 64 steps");
  if (!(T > 0.0)) fail(ErrorKind::InvalidArgument, "period must be positive");
  const double h = T / steps;
  std::vector<double> kn(static_cast<std::size_t>(2 * steps + 1));
  for (int i = 0; i <= 2 * steps; ++i) kn[static_cast<std::size_t>(i)] = pot.kappa.value(0.5 * h * i);
  HillSolution sol;
  auto path = detail::rk4(kn, h, y0, dy0, steps);
  for (int i = 0; i <= steps; ++i) sol.xs.push_back(h * i);
  sol.ys = std::move(path.ys);
  sol.dys = std::move(path.dys);
  auto b1 = detail::rk4(kn, h, 1.0, 0.0, steps);
  auto b2 = detail::rk4(kn, h, 0.0, 1.0, steps);
  sol.monodromy.m = {{{b1.ys.back(), b2.ys.back()}, {b1.dys.back(), b2.dys.back()}}};
  return sol;
}

/// Number of zeros of a sampled solution on [0, T): samples 0..N-1 are used
/// (the endpoint at T is excluded). A sample within 1e-9 max|y| of zero
/// counts as a zero. Throws GridTooCoarse when two consecutive grid
/// intervals both contain a sign change.
inline int nonoscillation_check(const std::vector<double>& ys) {
  if (ys.size() < 2) fail(ErrorKind::InvalidArgument, "need at least two samples");
  const std::size_t N = ys.size() - 1;
  double scale = 0.0;
  for (std::size_t i = 0; i < N; ++i) scale = std::max(scale, std::abs(ys[i]));
  const double tol = 1e-9 * scale;
  auto sgn = [&](double v) { return std::abs(v) <= tol ? 0 : (v > 0 ? 1 : -1); };
  int count = 0;
  bool last_crossed = false;
  for (std::size_t i = 0; i < N; ++i) {
    const int s = sgn(ys[i]);
    bool crossed = false;
    if (s == 0) {
      if (i == 0 || sgn(ys[i - 1]) != 0) {
        ++count;
        crossed = true;
      }
    } else if (i > 0) {
      const int prev = sgn(ys[i - 1]);
      if (prev != 0 && prev != s) {
        ++count;
        crossed = true;
      }
    }
    if (crossed && last_crossed && i > 1) {
      fail(ErrorKind::GridTooCoarse, "sign changes in two consecutive grid steps");
    }
    last_crossed = crossed;
  }
  return count;
}

struct NonOscillationReport {
  std::vector<int> zero_counts;
  bool nonoscillating = false;
};

/// Counts zeros of 8 random combinations of the basis solutions (seeded).
inline NonOscillationReport nonoscillation_report(const HillPotential& pot, double T, int steps,
                                                  unsigned seed = 20260415u) {
  auto u1 = hill_solve(pot, T, 1.0, 0.0, steps);
  auto u2 = hill_solve(pot, T, 0.0, 1.0, steps);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  NonOscillationReport rep;
  rep.nonoscillating = true;
  for (int k = 0; k < 8; ++k) {
    const double th = angle(rng);
    std::vector<double> y(u1.ys.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::cos(th) * u1.ys[i] + std::sin(th) * u2.ys[i];
    const int z = nonoscillation_check(y);
    rep.zero_counts.push_back(z);
    if (z != 1) rep.nonoscillating = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Continuous friezes

struct ContinuousFrieze {
  using Fn = std::function<double(double, double)>;
  Fn F;
  Fn Fx, Fy, Fxy, Fxx;  // empty evaluators fall back to central differences
  double period = 0.0;  // 0 for open friezes
  double h = 1e-4;      // finite-difference step

  double value(double x, double y) const { return F(x, y); }
  double dx(double x, double y) const {
    return Fx ? Fx(x, y) : (F(x + h, y) - F(x - h, y)) / (2 * h);
  }
  double dy(double x, double y) const {
    return Fy ? Fy(x, y) : (F(x, y + h) - F(x, y - h)) / (2 * h);
  }
  double dxy(double x, double y) const {
    if (Fxy) return Fxy(x, y);
    return (F(x + h, y + h) - F(x + h, y - h) - F(x - h, y + h) + F(x - h, y - h)) / (4 * h * h);
  }
  double dxx(double x, double y) const {
    return Fxx ? Fxx(x, y) : (F(x + h, y) - 2 * F(x, y) + F(x - h, y)) / (h * h);
  }
  bool analytic() const { return Fx && Fy && Fxy; }
};

/// F(x, y) = [Gamma(x), Gammat(y)] with partials from the derivatives.
inline ContinuousFrieze frieze_from_curves(const LiftedCurve& G, const LiftedCurve& Gt) {
  ContinuousFrieze fr;
  fr.F = [G, Gt](double x, double y) { return bracket(G(x), Gt(y)); };
  fr.Fx = [G, Gt](double x, double y) { return bracket(G.derivative(x, 1), Gt(y)); };
  fr.Fy = [G, Gt](double x, double y) { return bracket(G(x), Gt.derivative(y, 1)); };
  fr.Fxy = [G, Gt](double x, double y) { return bracket(G.derivative(x, 1), Gt.derivative(y, 1)); };
  fr.Fxx = [G, Gt](double x, double y) { return bracket(G.derivative(x, 2), Gt(y)); };
  fr.period = G.period;
  return fr;
}

inline ContinuousFrieze frieze_from_curve(const LiftedCurve& G) { return frieze_from_curves(G, G); }

/// F(x, y) = (f(y) - f(x)) / sqrt(f'(x) f'(y)), evaluated from f directly.
inline ContinuousFrieze frieze_genform(const SmoothFunction& f, double period) {
  // With u = f'^{-1/2} and v = f u: F = u(x) v(y) - v(x) u(y).
  auto uv = [f](double x) {
    Series s = f.at(x);
    Series d = s.shift_derivative();
    if (!(d[0] > 1e-14)) fail(ErrorKind::DerivativeVanishes, "f' <= 0 at x = " + std::to_string(x));
    Series u = pow(d, -0.5);
    Series v = s * u;
    return std::array<Series, 2>{u, v};
  };
  ContinuousFrieze fr;
  fr.F = [f](double x, double y) {
    const double dx = f.derivative(x, 1), dy = f.derivative(y, 1);
    if (!(dx > 1e-14) || !(dy > 1e-14)) fail(ErrorKind::DerivativeVanishes, "f' <= 0");
    return (f.value(y) - f.value(x)) / std::sqrt(dx * dy);
  };
  auto part = [uv](int kx, int ky) {
    return [uv, kx, ky](double x, double y) {
      auto a = uv(x);
      auto b = uv(y);
      return a[0].derivative(static_cast<std::size_t>(kx)) * b[1].derivative(static_cast<std::size_t>(ky)) -
             a[1].derivative(static_cast<std::size_t>(kx)) * b[0].derivative(static_cast<std::size_t>(ky));
    };
  };
  fr.Fx = part(1, 0);
  fr.Fy = part(0, 1);
  fr.Fxy = part(1, 1);
  fr.Fxx = part(2, 0);
  fr.period = period;
  return fr;
}

inline ContinuousFrieze frieze_genform(const ProjectiveCurve& curve) {
  return frieze_genform(curve.f(), curve.period);
}

/// A frieze given only by its values; partials by central differences.
inline ContinuousFrieze frieze_from_function(ContinuousFrieze::Fn F, double period = 0.0, double h = 1e-3) {
  ContinuousFrieze fr;
  fr.F = std::move(F);
  fr.period = period;
  fr.h = h;
  return fr;
}

/// Evaluation region: either the strip x0 <= x < x1, x + dmin <= y <= x + dmax,
/// or the rectangle [x0, x1] x [y0, y1].
struct FriezeDomain {
  bool strip = true;
  double x0 = 0, x1 = 0;
  double a = 0, b = 0;  // strip: dmin, dmax; rectangle: y0, y1

  /// The strip x + T/16 <= y <= x + T - T/16 over one period.
  static FriezeDomain periodic_strip(double T) { return {true, 0.0, T, T / 16, T - T / 16}; }
  static FriezeDomain band(double x0, double x1, double dmin, double dmax) { return {true, x0, x1, dmin, dmax}; }
  static FriezeDomain rectangle(double x0, double x1, double y0, double y1) { return {false, x0, x1, y0, y1}; }

  /// grid x grid points.
  template <class G>
  void for_each(int grid, G g) const {
    for (int i = 0; i < grid; ++i) {
      const double x = strip ? x0 + (x1 - x0) * i / grid : x0 + (x1 - x0) * i / (grid - 1);
      for (int j = 0; j < grid; ++j) {
        const double y = strip ? x + a + (b - a) * j / (grid - 1) : a + (b - a) * j / (grid - 1);
        g(x, y);
      }
    }
  }
};

inline FriezeDomain default_domain(const ContinuousFrieze& F) {
  return F.period > 0 ? FriezeDomain::periodic_strip(F.period) : FriezeDomain::band(0.0, 1.0, 0.25, 1.25);
}

/// max |F F_xy - F_x F_y - 1| over the grid.
inline double liouville_residual(const ContinuousFrieze& F, const FriezeDomain& dom, int grid = 64) {
  if (grid < 32) fail(ErrorKind::InvalidArgument, "Liouville grid must be at least 32x32");
  double worst = 0.0;
  dom.for_each(grid, [&](double x, double y) {
    const double r = F.value(x, y) * F.dxy(x, y) - F.dx(x, y) * F.dy(x, y) - 1.0;
    worst = std::max(worst, std::abs(r));
  });
  return worst;
}

struct BoundaryReport {
  double diagonal = 0.0;      // max |F(x, x)|
  double diagonal_dy = 0.0;   // max |F_y(x, x) - 1|
  double diagonal_dx = 0.0;   // max |F_x(x, x) + 1|
  double antiperiodic = 0.0;  // max |F(x+T, y) + F(x, y)|, |F(x, y+T) + F(x, y)|; NaN if open
  bool closed = false;

  double worst() const { return std::max({diagonal, diagonal_dy, diagonal_dx, closed ? antiperiodic : 0.0}); }
};

inline BoundaryReport boundary_check(const ContinuousFrieze& F, double T, int samples = 64) {
  BoundaryReport rep;
  const double len = T > 0 ? T : 1.0;
  for (int i = 0; i < samples; ++i) {
    const double x = len * (i + 0.25) / samples;
    rep.diagonal = std::max(rep.diagonal, std::abs(F.value(x, x)));
    rep.diagonal_dy = std::max(rep.diagonal_dy, std::abs(F.dy(x, x) - 1.0));
    rep.diagonal_dx = std::max(rep.diagonal_dx, std::abs(F.dx(x, x) + 1.0));
  }
  if (T > 0) {
    rep.closed = true;
    for (int i = 0; i < samples; ++i) {
      for (int j = 0; j < samples; j += 4) {
        const double x = T * (i + 0.25) / samples, y = T * (j + 0.6) / samples;
        const double f = F.value(x, y);
        rep.antiperiodic = std::max(rep.antiperiodic, std::abs(F.value(x + T, y) + f));
        rep.antiperiodic = std::max(rep.antiperiodic, std::abs(F.value(x, y + T) + f));
      }
    }
  } else {
    rep.antiperiodic = std::numeric_limits<double>::quiet_NaN();
  }
  return rep;
}

struct PotentialSample {
  double kappa = 0.0;   // mean of F_xx / F over the probe points
  double spread = 0.0;  // max deviation between probes
};

/// kappa(x) = F_xx(x, y) / F(x, y), probed at three values of y.
inline PotentialSample potential_from_frieze(const ContinuousFrieze& F, double x) {
  const double L = F.period > 0 ? F.period : 2.0;
  std::array<double, 3> ks{};
  for (int i = 0; i < 3; ++i) {
    const double y = x + L * (i + 1) / 4.0;
    const double v = F.value(x, y);
    if (std::abs(v) < 1e-12) fail(ErrorKind::DegenerateF, "F vanishes off the diagonal");
    ks[static_cast<std::size_t>(i)] = F.dxx(x, y) / v;
  }
  PotentialSample s;
  s.kappa = (ks[0] + ks[1] + ks[2]) / 3.0;
  s.spread = std::max({ks[0], ks[1], ks[2]}) - std::min({ks[0], ks[1], ks[2]});
  return s;
}

/// The potential as a Hill potential (internal kappa, finite-difference
/// derivatives).
inline HillPotential hill_potential_from_frieze(const ContinuousFrieze& F, double c) {
  return HillPotential::from_kappa(
      SmoothFunction::sampled([F](double x) { return potential_from_frieze(F, x).kappa; }), c);
}

// ---------------------------------------------------------------------------
// Kirillov form

struct KirillovFields {
  double line1 = 0.0;  // int k (X Y' - X' Y) - c X' Y''
  double line2 = 0.0;  // -int (X k' + 2 X' k + c X''') Y
};

/// Both lines of the Gelfand-Fuchs expression for k of 2c y'' + k y = 0;
/// throws QuadratureDisagreement when they differ by more than 1e-8.
inline KirillovFields kirillov_form_fields(const HillPotential& pot, const SmoothFunction& X,
                                           const SmoothFunction& Y, double T, int nodes = default_nodes(),
                                           double tol = 1e-8) {
  const double c = pot.c;
  auto k = pot.k();
  KirillovFields r;
  r.line1 = periodic_trapezoid(
      [&](double x) {
        Series K = k.at(x), A = X.at(x), B = Y.at(x);
        const double a0 = A[0], a1 = A[1], b0 = B[0], b1 = B[1], b2 = 2 * B[2];
        return K[0] * (a0 * b1 - a1 * b0) - c * a1 * b2;
      },
      T, nodes, 0.5);
  r.line2 = -periodic_trapezoid(
      [&](double x) {
        Series K = k.at(x), A = X.at(x), B = Y.at(x);
        return (A[0] * K[1] + 2 * A[1] * K[0] + c * A.derivative(3)) * B[0];
      },
      T, nodes, 0.5);
  if (std::abs(r.line1 - r.line2) > tol) {
    fail(ErrorKind::QuadratureDisagreement, "the two Kirillov integrals differ by " +
                                                std::to_string(std::abs(r.line1 - r.line2)));
  }
  return r;
}

/// xi = X f', the variation of f generated by the vector field X.
inline SmoothFunction variation_from_field(const ProjectiveCurve& curve, const SmoothFunction& X) {
  return X * curve.f_prime();
}

/// -c int (xi' eta'' - xi'' eta') / f'^2 dx over one period (midpoint nodes).
/// With xi = X f', eta = Y f' the integrand has a double pole where f does
/// unless X Y' - X' Y vanishes there to second order (for instance when X and
/// Y both vanish at the pole); otherwise the value depends on the grid.
inline double kirillov_form_curve(const ProjectiveCurve& curve, const SmoothFunction& xi,
                                  const SmoothFunction& eta, double c, int nodes = default_nodes()) {
  if (!curve.closed()) fail(ErrorKind::InvalidArgument, "Kirillov form needs a closed curve");
  auto fp = curve.f_prime();
  return -c * periodic_trapezoid(
                  [&](double x) {
                    Series A = xi.at(x), B = eta.at(x);
                    const double d = fp.value(x);
                    if (std::abs(d) < 1e-14) fail(ErrorKind::DerivativeVanishes, "f' vanishes");
                    return (A[1] * 2 * B[2] - 2 * A[2] * B[1]) / (d * d);
                  },
                  curve.period, nodes, 0.5);
}

// ---------------------------------------------------------------------------
// Constant curvature

struct CurvatureReport {
  std::vector<std::array<double, 3>> field;  // (x, y, K)
  double max_deviation = 0.0;                // max |K + 1|
};

/// Curvature of g = -4 F^{-2} dz dzbar with z, zbar the two arguments of F:
/// K = -(2/g) d^2 ln|g| / dx dy, the mixed derivative by central differences.
inline CurvatureReport curvature_conformal(const ContinuousFrieze& F, const FriezeDomain& dom, int grid = 64,
                                           double h = 1e-3) {
  auto lng = [&](double x, double y) {
    const double v = F.value(x, y);
    if (!(v > 0.0)) fail(ErrorKind::NonPositiveF, "F <= 0 in the evaluation region");
    return std::log(4.0) - 2.0 * std::log(v);
  };
  CurvatureReport rep;
  dom.for_each(grid, [&](double x, double y) {
    const double D = (lng(x + h, y + h) - lng(x + h, y - h) - lng(x - h, y + h) + lng(x - h, y - h)) / (4 * h * h);
    const double v = F.value(x, y);
    const double g = -4.0 / (v * v);
    const double K = -(2.0 / g) * D;
    rep.field.push_back({x, y, K});
    rep.max_deviation = std::max(rep.max_deviation, std::abs(K + 1.0));
  });
  return rep;
}

}  // namespace frieze_lab
