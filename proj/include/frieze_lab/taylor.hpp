#pragma once

// Truncated Taylor series in one variable: c[k] is the coefficient of t^k.
// Elementary functions use the usual first-order recurrences.

#include <array>
#include <cmath>
#include <cstddef>

namespace frieze_lab {

template <class T, std::size_t N>
class Taylor {
  static_assert(N >= 1);

 public:
  using value_type = T;
  static constexpr std::size_t size = N;

  Taylor() { c_.fill(T(0)); }
  Taylor(T constant) { c_.fill(T(0)); c_[0] = constant; }  // NOLINT(google-explicit-constructor)

  /// x0 + t.
  static Taylor variable(T x0) {
    Taylor r(x0);
    if constexpr (N > 1) r.c_[1] = T(1);
    return r;
  }

  T& operator[](std::size_t k) { return c_[k]; }
  const T& operator[](std::size_t k) const { return c_[k]; }
  T value() const { return c_[0]; }

  /// k-th derivative at t = 0.
  T derivative(std::size_t k) const {
    if (k >= N) return T(0);
    T f(1);
    for (std::size_t i = 2; i <= k; ++i) f *= T(static_cast<double>(i));
    return c_[k] * f;
  }

  Taylor operator-() const {
    Taylor r;
    for (std::size_t k = 0; k < N; ++k) r.c_[k] = -c_[k];
    return r;
  }
  Taylor& operator+=(const Taylor& o) { for (std::size_t k = 0; k < N; ++k) c_[k] += o.c_[k]; return *this; }
  Taylor& operator-=(const Taylor& o) { for (std::size_t k = 0; k < N; ++k) c_[k] -= o.c_[k]; return *this; }
  Taylor& operator*=(const Taylor& o) { return *this = *this * o; }
  Taylor& operator/=(const Taylor& o) { return *this = *this / o; }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (std::size_t i = 0; i < N; ++i) {
      if (a.c_[i] == T(0)) continue;
      for (std::size_t j = 0; i + j < N; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (std::size_t k = 0; k < N; ++k) {
      T acc = a.c_[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= b.c_[j] * r.c_[k - j];
      r.c_[k] = acc / b.c_[0];
    }
    return r;
  }

  /// Formal derivative d/dt; the top coefficient is lost.
  Taylor shift_derivative() const {
    Taylor r;
    for (std::size_t k = 0; k + 1 < N; ++k) r.c_[k] = T(static_cast<double>(k + 1)) * c_[k + 1];
    return r;
  }

  /// Evaluates this series (expanded around x0 = inner[0]) at inner.
  Taylor compose(const Taylor& inner) const {
    Taylor h = inner;
    h.c_[0] = T(0);
    Taylor r(c_[N - 1]);
    for (std::size_t k = N - 1; k-- > 0;) r = r * h + Taylor(c_[k]);
    return r;
  }

 private:
  std::array<T, N> c_;
};

template <class T, std::size_t N>
Taylor<T, N> exp(const Taylor<T, N>& a) {
  using std::exp;
  Taylor<T, N> e;
  e[0] = exp(a[0]);
  for (std::size_t k = 1; k < N; ++k) {
    T acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += T(static_cast<double>(j)) * a[j] * e[k - j];
    e[k] = acc / T(static_cast<double>(k));
  }
  return e;
}

template <class T, std::size_t N>
Taylor<T, N> log(const Taylor<T, N>& a) {
  using std::log;
  Taylor<T, N> l;
  l[0] = log(a[0]);
  for (std::size_t k = 1; k < N; ++k) {
    T acc = T(static_cast<double>(k)) * a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= T(static_cast<double>(j)) * l[j] * a[k - j];
    l[k] = acc / (T(static_cast<double>(k)) * a[0]);
  }
  return l;
}

/// Returns {sin a, cos a}.
template <class T, std::size_t N>
std::array<Taylor<T, N>, 2> sincos(const Taylor<T, N>& a) {
  using std::cos;
  using std::sin;
  Taylor<T, N> s, c;
  s[0] = sin(a[0]);
  c[0] = cos(a[0]);
  for (std::size_t k = 1; k < N; ++k) {
    T as(0), ac(0);
    for (std::size_t j = 1; j <= k; ++j) {
      as += T(static_cast<double>(j)) * a[j] * c[k - j];
      ac -= T(static_cast<double>(j)) * a[j] * s[k - j];
    }
    s[k] = as / T(static_cast<double>(k));
    c[k] = ac / T(static_cast<double>(k));
  }
  return {s, c};
}

template <class T, std::size_t N>
Taylor<T, N> sin(const Taylor<T, N>& a) { return sincos(a)[0]; }

template <class T, std::size_t N>
Taylor<T, N> cos(const Taylor<T, N>& a) { return sincos(a)[1]; }

template <class T, std::size_t N>
Taylor<T, N> tan(const Taylor<T, N>& a) {
  auto sc = sincos(a);
  return sc[0] / sc[1];
}

/// a^alpha for a[0] > 0.
template <class T, std::size_t N>
Taylor<T, N> pow(const Taylor<T, N>& a, T alpha) {
  using std::pow;
  Taylor<T, N> p;
  p[0] = pow(a[0], alpha);
  for (std::size_t k = 1; k < N; ++k) {
    T acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      acc += (alpha * T(static_cast<double>(j)) - T(static_cast<double>(k - j))) * a[j] * p[k - j];
    }
    p[k] = acc / (T(static_cast<double>(k)) * a[0]);
  }
  return p;
}

template <class T, std::size_t N>
Taylor<T, N> sqrt(const Taylor<T, N>& a) { return pow(a, T(0.5)); }

}  // namespace frieze_lab
