#pragma once

#include <cmath>
#include <type_traits>

#include "frieze_lab/rational.hpp"

namespace frieze_lab {

/// Exactness policy for the generic discrete code. Exact scalars compare with
/// ==, floating scalars with an absolute tolerance.
template <class T>
struct ScalarTraits {
  static constexpr bool exact = false;
  static constexpr double tolerance = 1e-10;
  static bool is_zero(const T& x) { return std::abs(x) <= 1e-14; }
  static bool equal(const T& a, const T& b) { return std::abs(a - b) <= tolerance; }
  static double to_double(const T& x) { return static_cast<double>(x); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static double to_double(const Rational& x) { return x.to_double(); }
};

template <class T>
bool scalar_is_zero(const T& x) { return ScalarTraits<T>::is_zero(x); }

template <class T>
bool scalar_equal(const T& a, const T& b) { return ScalarTraits<T>::equal(a, b); }

}  // namespace frieze_lab
