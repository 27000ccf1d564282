#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "conelab/core/error.hpp"
#include "conelab/core/rational.hpp"

namespace conelab {

enum class ExtTag { neg_inf, finite, pos_inf };

/// Arithmetic and ordering facts about a scalar type used as a function value.
/// Specialisations exist for Rational, double and RadicalSum.
template <class V>
struct value_traits;

template <>
struct value_traits<Rational> {
  using scale_type = Rational;
  static constexpr bool exact = true;
  static double to_double(const Rational& v) { return v.get_d(); }
  static std::string describe(const Rational& v) { return format_rational(v); }
};

template <>
struct value_traits<double> {
  using scale_type = double;
  static constexpr bool exact = false;
  static double to_double(double v) { return v; }
  static std::string describe(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
  }
};

/// An element of R ∪ {-inf, +inf}. The sum +inf + (-inf) is undefined and
/// throws rather than producing a value.
template <class T>
class ExtendedReal {
public:
  ExtendedReal() : tag_(ExtTag::finite), value_() {}
  ExtendedReal(T v) : tag_(ExtTag::finite), value_(std::move(v)) {} // NOLINT(google-explicit-constructor)

  static ExtendedReal pos_inf() { return ExtendedReal(ExtTag::pos_inf); }
  static ExtendedReal neg_inf() { return ExtendedReal(ExtTag::neg_inf); }

  ExtTag tag() const noexcept { return tag_; }
  bool is_finite() const noexcept { return tag_ == ExtTag::finite; }
  bool is_pos_inf() const noexcept { return tag_ == ExtTag::pos_inf; }
  bool is_neg_inf() const noexcept { return tag_ == ExtTag::neg_inf; }

  const T& value() const {
    if (!is_finite()) throw Error("not-finite", "value() on an infinite extended real");
    return value_;
  }

  ExtendedReal operator-() const {
    switch (tag_) {
    case ExtTag::pos_inf: return neg_inf();
    case ExtTag::neg_inf: return pos_inf();
    default: return ExtendedReal(T(-value_));
    }
  }

  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
      throw Error("undefined-sum", "+inf + -inf");
    if (!a.is_finite()) return a;
    if (!b.is_finite()) return b;
    return ExtendedReal(T(a.value_ + b.value_));
  }
  friend ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) { return a + (-b); }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.tag_ != b.tag_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtendedReal& a, const ExtendedReal& b) { return !(a == b); }
  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.tag_ != b.tag_) return static_cast<int>(a.tag_) < static_cast<int>(b.tag_);
    return a.is_finite() && a.value_ < b.value_;
  }
  friend bool operator>(const ExtendedReal& a, const ExtendedReal& b) { return b < a; }
  friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) { return !(b < a); }
  friend bool operator>=(const ExtendedReal& a, const ExtendedReal& b) { return !(a < b); }

  std::string describe() const {
    switch (tag_) {
    case ExtTag::pos_inf: return "+inf";
    case ExtTag::neg_inf: return "-inf";
    default: return value_traits<T>::describe(value_);
    }
  }

  double to_double() const {
    switch (tag_) {
    case ExtTag::pos_inf: return HUGE_VAL;
    case ExtTag::neg_inf: return -HUGE_VAL;
    default: return value_traits<T>::to_double(value_);
    }
  }

private:
  explicit ExtendedReal(ExtTag tag) : tag_(tag), value_() {}

  ExtTag tag_;
  T value_;
};

/// t * e for t > 0.
template <class T, class S>
ExtendedReal<T> scale(const S& t, const ExtendedReal<T>& e) {
  if (!(t > 0)) throw Error("non-positive-scale", "extended reals are only scaled by t > 0");
  if (!e.is_finite()) return e;
  return ExtendedReal<T>(T(e.value() * t));
}

template <class T>
ExtendedReal<T> min(const ExtendedReal<T>& a, const ExtendedReal<T>& b) { return b < a ? b : a; }
template <class T>
ExtendedReal<T> max(const ExtendedReal<T>& a, const ExtendedReal<T>& b) { return a < b ? b : a; }

using ExtRational = ExtendedReal<Rational>;
using ExtDouble = ExtendedReal<double>;

} // namespace conelab
