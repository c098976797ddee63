#pragma once

// First-order jets: a value together with its gradient with respect to a
// fixed set of base coordinates. Running the frieze reconstruction on jets
// yields exact Jacobians of the coordinate changes.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <vector>

#include "frieze_lab/scalar.hpp"

namespace frieze_lab {

template <class T>
class Jet {
 public:
  Jet() = default;
  Jet(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Jet(const T& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Jet(const T& v, std::vector<T> grad) : value_(v), grad_(std::move(grad)) {}

  /// The i-th of `dim` independent variables, evaluated at `v`.
  static Jet variable(const T& v, std::size_t i, std::size_t dim) {
    std::vector<T> g(dim, T(0));
    g.at(i) = T(1);
    return Jet(v, std::move(g));
  }

  const T& value() const { return value_; }
  /// Partial derivative with respect to variable i (zero for constants).
  T partial(std::size_t i) const { return i < grad_.size() ? grad_[i] : T(0); }
  std::size_t dim() const { return grad_.size(); }

  Jet operator-() const {
    Jet r(-value_, grad_);
    for (auto& g : r.grad_) g = -g;
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    return combine(a, b, a.value_ + b.value_, [](const T& da, const T& db) { return da + db; });
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    return combine(a, b, a.value_ - b.value_, [](const T& da, const T& db) { return da - db; });
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    const T& av = a.value_;
    const T& bv = b.value_;
    return combine(a, b, av * bv, [&](const T& da, const T& db) { return da * bv + av * db; });
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    if (scalar_is_zero(b.value_)) fail(ErrorKind::DivisionByZero, "jet division by zero");
    T q = a.value_ / b.value_;
    const T& bv = b.value_;
    return combine(a, b, q, [&](const T& da, const T& db) { return (da - q * db) / bv; });
  }
  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend bool operator==(const Jet& a, const Jet& b) {
    if (!(a.value_ == b.value_)) return false;
    std::size_t n = std::max(a.grad_.size(), b.grad_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!(a.partial(i) == b.partial(i))) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
    os << j.value_ << " [";
    for (std::size_t i = 0; i < j.grad_.size(); ++i) os << (i ? ", " : "") << j.grad_[i];
    return os << ']';
  }

 private:
  template <class Op>
  static Jet combine(const Jet& a, const Jet& b, T value, Op op) {
    std::size_t n = std::max(a.grad_.size(), b.grad_.size());
    std::vector<T> g;
    g.reserve(n);
    for (std::size_t i = 0; i < n; ++i) g.push_back(op(a.partial(i), b.partial(i)));
    return Jet(std::move(value), std::move(g));
  }

  T value_{};
  std::vector<T> grad_;
};

template <class T>
struct ScalarTraits<Jet<T>> {
  static constexpr bool exact = ScalarTraits<T>::exact;
  static bool is_zero(const Jet<T>& x) { return ScalarTraits<T>::is_zero(x.value()); }
  static bool equal(const Jet<T>& a, const Jet<T>& b) {
    std::size_t n = std::max(a.dim(), b.dim());
    if (!ScalarTraits<T>::equal(a.value(), b.value())) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!ScalarTraits<T>::equal(a.partial(i), b.partial(i))) return false;
    }
    return true;
  }
  static double to_double(const Jet<T>& x) { return ScalarTraits<T>::to_double(x.value()); }
};

}  // namespace frieze_lab
