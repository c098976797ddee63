#pragma once

// Smooth real functions represented by their action on truncated Taylor
// series, plus periodic quadrature and finite differences.
//
// A SmoothFunction maps a series s (an expansion of the argument around
// s[0]) to the expansion of f(s). Feeding it x0 + t yields all derivatives
// of f at x0, and composition is just chaining.

#include <cstdlib>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "frieze_lab/error.hpp"
#include "frieze_lab/taylor.hpp"

namespace frieze_lab {

using Series = Taylor<double, 10>;

class SmoothFunction {
 public:
  using Fn = std::function<Series(const Series&)>;

  SmoothFunction() : fn_(std::make_shared<Fn>([](const Series&) { return Series(0.0); })) {}
  explicit SmoothFunction(Fn fn) : fn_(std::make_shared<Fn>(std::move(fn))) {}

  /// Wraps a generic callable written once for Series arithmetic.
  template <class F>
  static SmoothFunction from(F f) {
    return SmoothFunction(Fn([f](const Series& s) { return Series(f(s)); }));
  }

  static SmoothFunction constant(double v) {
    return SmoothFunction(Fn([v](const Series&) { return Series(v); }));
  }

  static SmoothFunction identity() {
    return SmoothFunction(Fn([](const Series& s) { return s; }));
  }

  /// Builds a function from its local expansion: `expand(x0)` returns the
  /// Taylor coefficients in t around x0.
  static SmoothFunction local(std::function<Series(double)> expand) {
    return SmoothFunction(Fn([expand](const Series& s) { return expand(s[0]).compose(s); }));
  }

  /// Finite-difference fallback for a plain evaluator: derivatives up to
  /// order 3 from central differences with step h (second order accurate;
  /// relative accuracy about 1e-6 at the default step), higher ones zero.
  static SmoothFunction sampled(std::function<double(double)> g, double h = 1e-3) {
    return local([g, h](double x) {
      const double f0 = g(x), fp = g(x + h), fm = g(x - h), fpp = g(x + 2 * h), fmm = g(x - 2 * h);
      Series r(f0);
      r[1] = (fp - fm) / (2 * h);
      r[2] = (fp - 2 * f0 + fm) / (h * h) / 2.0;
      r[3] = (fpp - 2 * fp + 2 * fm - fmm) / (2 * h * h * h) / 6.0;
      return r;
    });
  }

  Series operator()(const Series& s) const { return (*fn_)(s); }

  /// Expansion around x in the local variable t.
  Series at(double x) const { return (*fn_)(Series::variable(x)); }
  double value(double x) const { return at(x)[0]; }
  double operator()(double x) const { return value(x); }
  double derivative(double x, int k) const { return at(x).derivative(static_cast<std::size_t>(k)); }

  SmoothFunction derivative_fn() const {
    auto fn = fn_;
    return local([fn](double x) { return (*fn)(Series::variable(x)).shift_derivative(); });
  }

  /// (*this) o inner.
  SmoothFunction compose(const SmoothFunction& inner) const {
    auto outer = fn_;
    auto in = inner.fn_;
    return SmoothFunction(Fn([outer, in](const Series& s) { return (*outer)((*in)(s)); }));
  }

  /// Applies a series-level unary map to the output.
  template <class G>
  SmoothFunction map(G g) const {
    auto fn = fn_;
    return SmoothFunction(Fn([fn, g](const Series& s) { return Series(g((*fn)(s))); }));
  }

  friend SmoothFunction operator+(const SmoothFunction& a, const SmoothFunction& b) {
    return binary(a, b, [](const Series& u, const Series& v) { return u + v; });
  }
  friend SmoothFunction operator-(const SmoothFunction& a, const SmoothFunction& b) {
    return binary(a, b, [](const Series& u, const Series& v) { return u - v; });
  }
  friend SmoothFunction operator*(const SmoothFunction& a, const SmoothFunction& b) {
    return binary(a, b, [](const Series& u, const Series& v) { return u * v; });
  }
  friend SmoothFunction operator/(const SmoothFunction& a, const SmoothFunction& b) {
    return binary(a, b, [](const Series& u, const Series& v) { return u / v; });
  }
  friend SmoothFunction operator*(double k, const SmoothFunction& a) {
    return a.map([k](const Series& u) { return Series(k) * u; });
  }
  friend SmoothFunction operator+(const SmoothFunction& a, double k) {
    return a.map([k](const Series& u) { return u + Series(k); });
  }
  SmoothFunction operator-() const {
    return map([](const Series& u) { return -u; });
  }

 private:
  template <class Op>
  static SmoothFunction binary(const SmoothFunction& a, const SmoothFunction& b, Op op) {
    auto fa = a.fn_;
    auto fb = b.fn_;
    return SmoothFunction(Fn([fa, fb, op](const Series& s) { return op((*fa)(s), (*fb)(s)); }));
  }

  std::shared_ptr<const Fn> fn_;
};

/// Node count for quadrature and ODE integration: 4096 unless the
/// FRIEZE_LAB_NODES environment variable holds a positive integer.
inline int default_nodes() {
  if (const char* env = std::getenv("FRIEZE_LAB_NODES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 100000000) return static_cast<int>(v);
  }
  return 4096;
}

/// Composite trapezoid rule over one period [a, a + T) with nodes
/// a + (i + offset) h; offset 0.5 gives the midpoint rule.
template <class G>
double periodic_trapezoid(G g, double T, int nodes, double offset = 0.0, double a = 0.0) {
  if (nodes <= 0) fail(ErrorKind::InvalidArgument, "quadrature needs a positive node count");
  const double h = T / nodes;
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) sum += g(a + (i + offset) * h);
  return sum * h;
}

/// Second-order central differences.
template <class G>
double central_diff(G g, double x, double h = 1e-4) {
  return (g(x + h) - g(x - h)) / (2 * h);
}

template <class G>
double central_diff2(G g, double x, double h = 1e-4) {
  return (g(x + h) - 2 * g(x) + g(x - h)) / (h * h);
}

}  // namespace frieze_lab
