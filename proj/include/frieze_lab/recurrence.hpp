#pragma once

// Discrete Hill equations V_{i+1} = c_i V_i - V_{i-1}, their monodromy, the
// fundamental polygon of a closed frieze, and cross-ratio coordinates of the
// projected polygon.

#include <cstddef>
#include <vector>

#include "frieze_lab/error.hpp"
#include "frieze_lab/frieze.hpp"
#include "frieze_lab/plane.hpp"

namespace frieze_lab {

template <class T>
struct DiscreteHillEquation {
  std::vector<T> c;  // one period c_0..c_{n-1}

  int n() const { return static_cast<int>(c.size()); }
  const T& coeff(long long i) const { return c[static_cast<std::size_t>(mod_index(i, n()))]; }
};

template <class T>
struct PlanarPolygon {
  std::vector<Vec2<T>> vertices;

  int n() const { return static_cast<int>(vertices.size()); }
  const Vec2<T>& operator[](std::size_t i) const { return vertices[i]; }
};

/// Returns V_0, ..., V_steps.
template <class T>
std::vector<Vec2<T>> solve_recurrence(const DiscreteHillEquation<T>& eq, const Vec2<T>& v0,
                                      const Vec2<T>& v1, int steps) {
  if (steps < 2) fail(ErrorKind::InvalidArgument, "solve_recurrence needs at least 2 steps");
  if (eq.n() == 0) fail(ErrorKind::InvalidArgument, "empty potential");
  std::vector<Vec2<T>> out{v0, v1};
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 1; i < steps; ++i) {
    const auto& cur = out[static_cast<std::size_t>(i)];
    const auto& prev = out[static_cast<std::size_t>(i - 1)];
    out.push_back(eq.coeff(i) * cur - prev);
  }
  return out;
}

/// Step matrix mapping (V_i, V_{i-1}) to (V_{i+1}, V_i).
template <class T>
Mat2<T> step_matrix(const T& c) {
  Mat2<T> s;
  s.m = {{{c, T(-1)}, {T(1), T(0)}}};
  return s;
}

/// M = S_{n-1} ... S_0.
template <class T>
Mat2<T> monodromy(const DiscreteHillEquation<T>& eq) {
  Mat2<T> m = Mat2<T>::identity();
  for (int i = 0; i < eq.n(); ++i) m = step_matrix(eq.coeff(i)) * m;
  return m;
}

template <class T>
Mat2<T> minus_identity() {
  Mat2<T> m;
  m.m = {{{T(-1), T(0)}, {T(0), T(-1)}}};
  return m;
}

/// Closure test M = -Id (exact for rationals, 1e-10 entrywise for doubles).
template <class T>
bool is_closed(const DiscreteHillEquation<T>& eq) {
  return approx_equal(monodromy(eq), minus_identity<T>());
}

/// Polygon V_i = (v[i-1][1], v[i][0]): V_0 = (0, 1), V_i = (x_i, a_i),
/// V_{n-1} = (1, 0), where a_i runs down the diagonal at column 0.
template <class T>
PlanarPolygon<T> polygon_from_frieze(const FriezePattern<T>& F) {
  PlanarPolygon<T> P;
  for (int i = 0; i < F.period(); ++i) P.vertices.push_back({F.at(i - 1, 1), F.at(i, 0)});
  return P;
}

/// Same polygon computed from the diagonal alone:
/// x_0 = 0, x_1 = 1, x_{i+1} = (x_i a_{i+1} + 1) / a_i with a_0 = a_{w+1} = 1
/// and a_{w+2} = 0. Works over any scalar, including jets.
template <class T>
PlanarPolygon<T> polygon_from_diagonal(const std::vector<T>& a) {
  const int w = static_cast<int>(a.size());
  const int n = w + 3;
  auto diag = [&](int i) -> T {
    if (i == 0 || i == w + 1) return T(1);
    if (i == w + 2) return T(0);
    return a[static_cast<std::size_t>(i - 1)];
  };
  PlanarPolygon<T> P;
  T x = T(0);
  P.vertices.push_back({x, T(1)});
  x = T(1);
  for (int i = 1; i < n; ++i) {
    P.vertices.push_back({x, diag(i)});
    if (i + 1 < n) {
      if (scalar_is_zero(diag(i))) fail(ErrorKind::ZeroEntryEncountered, "zero diagonal entry");
      x = (x * diag(i + 1) + T(1)) / diag(i);
    }
  }
  return P;
}

template <class T>
DiscreteHillEquation<T> equation_of(const FriezePattern<T>& F) {
  return DiscreteHillEquation<T>{F.quiddity()};
}

template <class T>
struct ModuliPoint {
  std::vector<Vec2<T>> points;  // homogeneous representatives
  std::vector<T> cross_ratios;  // cr(p_0, p_1, p_i, p_{n-1}) for i = 2..n-2
};

/// cr(a, b, c, d) = [a,c][b,d] / ([a,b][c,d]); on affine representatives
/// (t, 1) this is ((a-c)(b-d)) / ((a-b)(c-d)).
template <class T>
T cross_ratio(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c, const Vec2<T>& d) {
  const T ab = bracket(a, b), ac = bracket(a, c), ad = bracket(a, d);
  const T bc = bracket(b, c), bd = bracket(b, d), cd = bracket(c, d);
  for (const T* v : {&ab, &ac, &ad, &bc, &bd, &cd}) {
    if (scalar_is_zero(*v)) fail(ErrorKind::DegeneratePoint, "cross-ratio of non-distinct points");
  }
  return (ac * bd) / (ab * cd);
}

template <class T>
ModuliPoint<T> cross_ratio_coordinates(const PlanarPolygon<T>& P) {
  const int n = P.n();
  if (n < 4) fail(ErrorKind::InvalidArgument, "moduli coordinates need n >= 4");
  ModuliPoint<T> m;
  m.points = P.vertices;
  const auto& p0 = P.vertices.front();
  const auto& p1 = P.vertices[1];
  const auto& pl = P.vertices.back();
  for (int i = 2; i <= n - 2; ++i) m.cross_ratios.push_back(cross_ratio(p0, p1, P.vertices[static_cast<std::size_t>(i)], pl));
  return m;
}

}  // namespace frieze_lab
