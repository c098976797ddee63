#pragma once

#include <array>
#include <ostream>

#include "frieze_lab/scalar.hpp"

namespace frieze_lab {

/// A vector in the plane.
template <class T>
struct Vec2 {
  T x{};
  T y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const T& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << '(' << v.x << ", " << v.y << ')';
  }
};

/// The 2x2 determinant [u, v] = u.x v.y - u.y v.x.
template <class T>
T bracket(const Vec2<T>& u, const Vec2<T>& v) {
  return u.x * v.y - u.y * v.x;
}

/// Row-major 2x2 matrix.
template <class T>
struct Mat2 {
  std::array<std::array<T, 2>, 2> m{};

  static Mat2 identity() {
    Mat2 r;
    r.m = {{{T(1), T(0)}, {T(0), T(1)}}};
    return r;
  }

  T det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  T trace() const { return m[0][0] + m[1][1]; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    }
    return r;
  }
  friend Vec2<T> operator*(const Mat2& a, const Vec2<T>& v) {
    return {a.m[0][0] * v.x + a.m[0][1] * v.y, a.m[1][0] * v.x + a.m[1][1] * v.y};
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.m == b.m; }
};

/// True when every entry of `a` matches the corresponding entry of `b`
/// (exactly for rationals, within 1e-10 for floating point).
template <class T>
bool approx_equal(const Mat2<T>& a, const Mat2<T>& b) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!scalar_equal(a.m[i][j], b.m[i][j])) return false;
    }
  }
  return true;
}

}  // namespace frieze_lab
