#pragma once

// Discretizing a projective curve into polygons and comparing the discrete
// cluster form with its continuum limit -(1/4c) omega_K.
//
// Scheme: V_i = eps^{-1/2} Gamma(i eps), eps = T/n. Tangents are given by
// periodic vector fields X; the induced variation of the lift is
// dGamma = X Gamma' - X' Gamma / 2, sampled with the same scaling. Fields are
// first gauge-fixed by sl2 fields so that X(0) = X'(0) = 0, and the study
// runs in the chart whose pole sits at x = 0, where V_{n-1} points.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "frieze_lab/cluster_form.hpp"
#include "frieze_lab/continuum.hpp"
#include "frieze_lab/recurrence.hpp"

namespace frieze_lab {

struct DiscretizationScheme {
  int n = 0;
  double T = 0.0;

  DiscretizationScheme(int n_, double T_) : n(n_), T(T_) {
    if (n < 8) fail(ErrorKind::InvalidArgument, "a discretization needs n >= 8");
    if (!(T > 0.0)) fail(ErrorKind::InvalidArgument, "period must be positive");
  }
  double eps() const { return T / n; }
};

inline PlanarPolygon<double> sample_polygon(const LiftedCurve& G, const DiscretizationScheme& s) {
  const double eps = s.eps(), scale = 1.0 / std::sqrt(eps);
  PlanarPolygon<double> P;
  for (int i = 0; i < s.n; ++i) P.vertices.push_back(scale * G(i * eps));
  return P;
}

/// max_i |[V_i, V_{i+1}] - 1| over i = 0..n-2.
inline double unimodularity_defect(const PlanarPolygon<double>& P) {
  double worst = 0.0;
  for (int i = 0; i + 1 < P.n(); ++i) {
    worst = std::max(worst, std::abs(bracket(P[static_cast<std::size_t>(i)], P[static_cast<std::size_t>(i + 1)]) - 1.0));
  }
  return worst;
}

/// c_i = 2 + eps^2 kappa(i eps), the second-difference form of u'' = kappa u.
inline DiscreteHillEquation<double> quiddity_from_potential(const SmoothFunction& kappa, const DiscretizationScheme& s) {
  DiscreteHillEquation<double> eq;
  const double eps = s.eps();
  for (int i = 0; i < s.n; ++i) eq.c.push_back(2.0 + eps * eps * kappa.value(i * eps));
  return eq;
}

/// The monodromy in the basis (u_i, (u_i - u_{i-1}) / eps), comparable with
/// the (u, u') monodromy of the continuous equation. In the raw basis
/// (u_i, u_{i-1}) the entries differ from it by O(1/eps) conjugation.
inline Mat2<double> derivative_basis_monodromy(const DiscreteHillEquation<double>& eq, double eps) {
  Mat2<double> P, Pinv;
  P.m = {{{1.0, 0.0}, {1.0 / eps, -1.0 / eps}}};
  Pinv.m = {{{1.0, 0.0}, {1.0, -eps}}};
  return P * monodromy(eq) * Pinv;
}

/// dGamma = X Gamma' - X' Gamma / 2: the variation of the lift along the
/// vector field X (keeps [Gamma, Gamma'] = 1).
inline LiftedCurve tangent_lift(const LiftedCurve& G, const SmoothFunction& X) {
  auto comp = [X](const SmoothFunction& g) {
    return SmoothFunction::local([X, g](double x) {
      Series a = X.at(x), b = g.at(x);
      return a * b.shift_derivative() - Series(0.5) * a.shift_derivative() * b;
    });
  };
  return LiftedCurve{comp(G.g1), comp(G.g2), G.period};
}

/// X_A = [Gamma, A Gamma]; its tangent lift is A Gamma.
inline SmoothFunction sl2_field(const LiftedCurve& G, const Mat2<double>& A) {
  return SmoothFunction::local([G, A](double x) {
    Series a = G.g1.at(x), b = G.g2.at(x);
    Series Aa = Series(A.m[0][0]) * a + Series(A.m[0][1]) * b;
    Series Ab = Series(A.m[1][0]) * a + Series(A.m[1][1]) * b;
    return a * Ab - b * Aa;
  });
}

inline std::array<Mat2<double>, 3> sl2_basis() {
  Mat2<double> E, F, H;
  E.m = {{{0.0, 1.0}, {0.0, 0.0}}};
  F.m = {{{0.0, 0.0}, {1.0, 0.0}}};
  H.m = {{{1.0, 0.0}, {0.0, -1.0}}};
  return {E, F, H};
}

namespace detail {

// Minimum-norm solution of the 2x3 system M lambda = r.
inline std::array<double, 3> min_norm_solve(const std::array<std::array<double, 3>, 2>& M,
                                            const std::array<double, 2>& r) {
  double g00 = 0, g01 = 0, g11 = 0;
  for (int k = 0; k < 3; ++k) {
    g00 += M[0][static_cast<std::size_t>(k)] * M[0][static_cast<std::size_t>(k)];
    g01 += M[0][static_cast<std::size_t>(k)] * M[1][static_cast<std::size_t>(k)];
    g11 += M[1][static_cast<std::size_t>(k)] * M[1][static_cast<std::size_t>(k)];
  }
  const double det = g00 * g11 - g01 * g01;
  if (std::abs(det) < 1e-300) fail(ErrorKind::DegeneratePoint, "singular gauge system");
  const double y0 = (g11 * r[0] - g01 * r[1]) / det;
  const double y1 = (-g01 * r[0] + g00 * r[1]) / det;
  std::array<double, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) out[k] = M[0][k] * y0 + M[1][k] * y1;
  return out;
}

}  // namespace detail

/// Subtracts sl2 fields so that the result and its derivative vanish at x0.
/// The Kirillov form does not see the correction.
inline SmoothFunction gauge_fix_field(const LiftedCurve& G, const SmoothFunction& X, double x0 = 0.0) {
  auto basis = sl2_basis();
  std::array<SmoothFunction, 3> fields{sl2_field(G, basis[0]), sl2_field(G, basis[1]), sl2_field(G, basis[2])};
  std::array<std::array<double, 3>, 2> M{};
  for (std::size_t k = 0; k < 3; ++k) {
    Series s = fields[k].at(x0);
    M[0][k] = s[0];
    M[1][k] = s[1];
  }
  Series sx = X.at(x0);
  auto lam = detail::min_norm_solve(M, {sx[0], sx[1]});
  return X - (lam[0] * fields[0] + lam[1] * fields[1] + lam[2] * fields[2]);
}

/// Samples xi_i = eps^{-1/2} dGamma(i eps) and removes the sl2 motion A V_i
/// (minimum-norm A with A V_{n-1} = xi_{n-1}), so xi_{n-1} = 0.
inline PolygonTangent<double> lift_polygon_tangent(const LiftedCurve& G, const SmoothFunction& X,
                                                   const DiscretizationScheme& s) {
  auto dG = tangent_lift(G, X);
  const double eps = s.eps(), scale = 1.0 / std::sqrt(eps);
  PolygonTangent<double> xi;
  std::vector<Vec2<double>> V;
  for (int i = 0; i < s.n; ++i) {
    xi.push_back(scale * dG(i * eps));
    V.push_back(scale * G(i * eps));
  }
  const auto& v = V.back();
  const auto& t = xi.back();
  // A = [[a, b], [c, -a]]: A v = (a v.x + b v.y, c v.x - a v.y).
  auto abc = detail::min_norm_solve({{{v.x, v.y, 0.0}, {-v.y, 0.0, v.x}}}, {t.x, t.y});
  Mat2<double> A;
  A.m = {{{abc[0], abc[1]}, {abc[2], -abc[0]}}};
  for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = xi[i] - A * V[i];
  xi.back() = {0.0, 0.0};
  return xi;
}

/// max_i |[V_i, xi_{i+1}] + [xi_i, V_{i+1}]| over i = 0..n-2.
inline double constraint_residual(const PlanarPolygon<double>& P, const PolygonTangent<double>& xi) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < xi.size(); ++i) {
    worst = std::max(worst, std::abs(bracket(P[i], xi[i + 1]) + bracket(xi[i], P[i + 1])));
  }
  return worst;
}

inline double discrete_form_value(const PlanarPolygon<double>& P, const PolygonTangent<double>& xi,
                                  const PolygonTangent<double>& eta) {
  return omega_geometric(P, xi, eta);
}

/// int (u v' - u' v) / g^2 over [a, b) with u = [e, dGamma_xi], v = [e, dGamma_eta],
/// g = [e, Gamma]; midpoint nodes.
inline double continuum_integral_on(const LiftedCurve& G, const LiftedCurve& dxi, const LiftedCurve& deta,
                                    const Vec2<double>& e, double a, double b, int nodes) {
  auto integrand = [&](double x) {
    auto g = bracket(e, G(x));
    if (std::abs(g) < 1e-10) fail(ErrorKind::SecondComponentVanishes, "[e, Gamma] vanishes at a node");
    auto u0 = bracket(e, dxi(x)), u1 = bracket(e, dxi.derivative(x, 1));
    auto v0 = bracket(e, deta(x)), v1 = bracket(e, deta.derivative(x, 1));
    return (u0 * v1 - u1 * v0) / (g * g);
  };
  return periodic_trapezoid(integrand, b - a, nodes, 0.5, a);
}

/// Continuum integral over one period. With e = (0, 1), [e, Gamma] is minus
/// the f'^{-1/2} component of the lift.
inline double continuum_integral(const LiftedCurve& G, const LiftedCurve& dxi, const LiftedCurve& deta,
                                 const Vec2<double>& e = {0.0, 1.0}, int nodes = default_nodes()) {
  return continuum_integral_on(G, dxi, deta, e, 0.0, G.period, nodes);
}

struct ConvergenceRecord {
  int n = 0;
  double discrete = 0.0;
  double integral = 0.0;
  double kirillov_scaled = 0.0;
  double err_integral = 0.0;
  double err_kirillov = 0.0;
  double observed_order = std::numeric_limits<double>::quiet_NaN();
  double boundary = 0.0;              // integral over the two cells the discrete sum omits
  double unimodularity_defect = 0.0;  // max |[V_i, V_{i+1}] - 1|
};

struct ConvergenceReport {
  double c = 0.5;
  double integral = 0.0;
  double kirillov_scaled = 0.0;  // -(1/4c) omega_K on (X f', Y f')
  double kirillov_fields = 0.0;  // omega_K from (k, X, Y)
  std::vector<ConvergenceRecord> records;
  bool claim = false;      // enough resolution to judge convergence
  bool converged = false;  // decreasing errors and final relative error < 1e-2
  std::string warning;
};

/// Runs the discrete sum at every n and compares it with the continuum
/// integral and with -(1/4c) omega_K.
inline ConvergenceReport convergence_study(const ProjectiveCurve& curve, const SmoothFunction& X,
                                           const SmoothFunction& Y, double c, const std::vector<int>& n_list,
                                           int nodes = default_nodes()) {
  if (!curve.closed()) fail(ErrorKind::InvalidArgument, "convergence study needs a closed curve");
  if (c == 0.0) fail(ErrorKind::InvalidArgument, "central constant must be nonzero");
  if (n_list.empty()) fail(ErrorKind::InvalidArgument, "empty n list");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) fail(ErrorKind::InvalidArgument, "n list must be increasing");
  }
  const double T = curve.period;
  ConvergenceReport rep;
  rep.c = c;

  const ProjectiveCurve chart = curve.with_pole_at(0.0);
  const LiftedCurve G = lift_curve(chart);
  const SmoothFunction Xg = gauge_fix_field(G, X), Yg = gauge_fix_field(G, Y);
  const LiftedCurve dX = tangent_lift(G, Xg), dY = tangent_lift(G, Yg);
  const Vec2<double> e{0.0, 1.0};

  rep.integral = continuum_integral(G, dX, dY, e, nodes);
  rep.kirillov_scaled =
      -1.0 / (4.0 * c) *
      kirillov_form_curve(chart, variation_from_field(chart, Xg), variation_from_field(chart, Yg), c, nodes);
  rep.kirillov_fields = kirillov_form_fields(hill_potential(curve, c), X, Y, T, nodes).line1;

  for (int n : n_list) {
    DiscretizationScheme s(n, T);
    ConvergenceRecord r;
    r.n = n;
    auto P = sample_polygon(G, s);
    r.discrete = discrete_form_value(P, lift_polygon_tangent(G, Xg, s), lift_polygon_tangent(G, Yg, s));
    r.integral = rep.integral;
    r.kirillov_scaled = rep.kirillov_scaled;
    r.err_integral = std::abs(r.discrete - r.integral);
    r.err_kirillov = std::abs(r.discrete - r.kirillov_scaled);
    const double eps = s.eps();
    const int cells = std::max(64, nodes / n);
    r.boundary = continuum_integral_on(G, dX, dY, e, 0.0, eps, cells) +
                 continuum_integral_on(G, dX, dY, e, (n - 3) * eps, T, 3 * cells);
    r.unimodularity_defect = unimodularity_defect(P);
    if (!rep.records.empty() && r.err_kirillov > 0.0 && rep.records.back().err_kirillov > 0.0) {
      r.observed_order = std::log2(rep.records.back().err_kirillov / r.err_kirillov);
    }
    rep.records.push_back(r);
  }

  int doublings = 0;
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] >= 2 * n_list[i - 1]) ++doublings;
  }
  if (n_list.front() < 16 || doublings < 3) {
    rep.warning = "below resolution floor (need n >= 16 and at least 3 doublings): no pass/fail claim";
    return rep;
  }
  rep.claim = true;
  bool decreasing = true;
  for (std::size_t i = 1; i < rep.records.size(); ++i) {
    const double prev = rep.records[i - 1].err_kirillov, cur = rep.records[i].err_kirillov;
    if (!(cur < prev || (cur == 0.0 && prev == 0.0))) decreasing = false;
  }
  const double ref = std::abs(rep.kirillov_scaled);
  const double last = rep.records.back().err_kirillov;
  const double rel = ref > 0.0 ? last / ref : last;
  rep.converged = decreasing && rel < 1e-2;
  return rep;
}

}  // namespace frieze_lab
