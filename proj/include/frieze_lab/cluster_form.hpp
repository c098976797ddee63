#pragma once

// The cluster 2-form on friezes of width w:
//   omega = sum_{i=1}^{w-1} da_i ^ da_{i+1} / (a_i a_{i+1})
// in diagonal coordinates, its zigzag counterpart with signs on South-West
// steps, exact Jacobians between coordinate systems (jet arithmetic), the
// rank of the form, and its evaluation on polygon tangents.

#include <cstddef>
#include <utility>
#include <vector>

#include "frieze_lab/error.hpp"
#include "frieze_lab/frieze.hpp"
#include "frieze_lab/jet.hpp"
#include "frieze_lab/recurrence.hpp"

namespace frieze_lab {

template <class T>
using TangentVector = std::vector<T>;

template <class T>
using PolygonTangent = std::vector<Vec2<T>>;

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline void require_dims(std::size_t w, std::size_t a, std::size_t b) {
  if (a != w || b != w) fail(ErrorKind::InvalidArgument, "tangent dimension does not match the width");
}

}  // namespace detail

template <class T>
T omega_diagonal(const std::vector<T>& a, const TangentVector<T>& xi, const TangentVector<T>& eta) {
  detail::require_dims(a.size(), xi.size(), eta.size());
  T sum(0);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    sum += (xi[i] * eta[i + 1] - xi[i + 1] * eta[i]) / (a[i] * a[i + 1]);
  }
  return sum;
}

/// Terms along South-West steps enter with a minus sign.
template <class T>
T omega_zigzag(const ZigzagCoords<T>& z, const TangentVector<T>& xi, const TangentVector<T>& eta) {
  const auto& a = z.values;
  detail::require_dims(a.size(), xi.size(), eta.size());
  validate_path(z.path, z.width());
  T sum(0);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    T term = (xi[i] * eta[i + 1] - xi[i + 1] * eta[i]) / (a[i] * a[i + 1]);
    if (z.path.moves[i] == Move::SW) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

/// Jacobian d(coords on `target`) / d(coords of `from`), row i holding the
/// gradient of the i-th target coordinate.
template <class T>
Matrix<T> zigzag_jacobian(const ZigzagCoords<T>& from, const ZigzagPath& target) {
  const std::size_t w = from.values.size();
  ZigzagCoords<Jet<T>> seed;
  seed.path = from.path;
  for (std::size_t i = 0; i < w; ++i) seed.values.push_back(Jet<T>::variable(from.values[i], i, w));
  auto F = zigzag_to_frieze(seed);
  auto image = read_zigzag(F, target);
  Matrix<T> J(w, std::vector<T>(w, T(0)));
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t k = 0; k < w; ++k) J[i][k] = image.values[i].partial(k);
  }
  return J;
}

template <class T>
TangentVector<T> mat_apply(const Matrix<T>& J, const TangentVector<T>& xi) {
  TangentVector<T> out(J.size(), T(0));
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (J[i].size() != xi.size()) fail(ErrorKind::InvalidArgument, "dimension mismatch in pushforward");
    for (std::size_t k = 0; k < xi.size(); ++k) out[i] += J[i][k] * xi[k];
  }
  return out;
}

/// Pushes a tangent vector at `from` forward to the coordinates on `target`.
template <class T>
TangentVector<T> pushforward(const ZigzagCoords<T>& from, const ZigzagPath& target, const TangentVector<T>& xi) {
  return mat_apply(zigzag_jacobian(from, target), xi);
}

/// The antisymmetric matrix of omega in diagonal coordinates.
template <class T>
Matrix<T> omega_matrix(const std::vector<T>& a) {
  const std::size_t w = a.size();
  Matrix<T> m(w, std::vector<T>(w, T(0)));
  for (std::size_t i = 0; i + 1 < w; ++i) {
    if (scalar_is_zero(a[i]) || scalar_is_zero(a[i + 1])) {
      fail(ErrorKind::ZeroEntryEncountered, "diagonal coordinate is zero");
    }
    m[i][i + 1] = T(1) / (a[i] * a[i + 1]);
    m[i + 1][i] = -m[i][i + 1];
  }
  return m;
}

/// Rank by fraction-free (Bareiss) elimination with row pivoting.
template <class T>
int matrix_rank(Matrix<T> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  T prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && scalar_is_zero(m[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = T(0);
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

template <class T>
int omega_rank(const std::vector<T>& a) {
  return matrix_rank(omega_matrix(a));
}

/// Evaluates omega on polygon tangents through brackets with V_{n-1}:
/// sum_{i=1}^{w-1} ([e,xi_i][e,eta_{i+1}] - [e,xi_{i+1}][e,eta_i]) / ([e,V_i][e,V_{i+1}])
/// with e = V_{n-1}. Tangents must be gauged so that xi_{n-1} = eta_{n-1} = 0.
template <class T>
T omega_geometric(const PlanarPolygon<T>& P, const PolygonTangent<T>& xi, const PolygonTangent<T>& eta) {
  const int n = P.n();
  if (n < 3) fail(ErrorKind::InvalidArgument, "polygon needs at least 3 vertices");
  if (static_cast<int>(xi.size()) != n || static_cast<int>(eta.size()) != n) {
    fail(ErrorKind::InvalidArgument, "tangent length does not match the polygon");
  }
  const auto last = static_cast<std::size_t>(n - 1);
  for (const auto* t : {&xi, &eta}) {
    if (!scalar_is_zero((*t)[last].x) || !scalar_is_zero((*t)[last].y)) {
      fail(ErrorKind::GaugeViolation, "tangent component at V_{n-1} must vanish");
    }
  }
  const Vec2<T>& e = P.vertices[last];
  const int w = n - 3;
  T sum(0);
  for (int i = 1; i + 1 <= w; ++i) {
    const auto k = static_cast<std::size_t>(i);
    T den = bracket(e, P.vertices[k]) * bracket(e, P.vertices[k + 1]);
    if (scalar_is_zero(den)) fail(ErrorKind::DegeneratePoint, "vertex parallel to V_{n-1}");
    sum += (bracket(e, xi[k]) * bracket(e, eta[k + 1]) - bracket(e, xi[k + 1]) * bracket(e, eta[k])) / den;
  }
  return sum;
}

/// The polygon tangent induced by a variation delta a of the diagonal,
/// obtained by differentiating polygon_from_diagonal. V_0 and V_{n-1} do not
/// move, so the result is already gauged.
template <class T>
PolygonTangent<T> polygon_tangent(const std::vector<T>& a, const TangentVector<T>& delta) {
  const std::size_t w = a.size();
  if (delta.size() != w) fail(ErrorKind::InvalidArgument, "tangent dimension does not match the width");
  std::vector<Jet<T>> seed;
  for (std::size_t i = 0; i < w; ++i) seed.push_back(Jet<T>::variable(a[i], i, w));
  auto P = polygon_from_diagonal(seed);
  PolygonTangent<T> out;
  for (const auto& v : P.vertices) {
    Vec2<T> d{T(0), T(0)};
    for (std::size_t k = 0; k < w; ++k) {
      d.x += v.x.partial(k) * delta[k];
      d.y += v.y.partial(k) * delta[k];
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace frieze_lab
