#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conelab/core/error.hpp"
#include "conelab/core/extended_real.hpp"
#include "conelab/core/rational.hpp"
#include "conelab/core/sparse_seq.hpp"

namespace conelab::convex {

/// Vector-space operations a point type must provide to be used with the
/// checkers: add, scale, dot, norm_sq, describe and a scale_type.
template <class P>
struct point_traits;

template <class T>
struct point_traits<std::vector<T>> {
  using scale_type = T;

  static std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw Error("dimension-mismatch", "adding vectors of unequal length");
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  static std::vector<T> scale(const T& t, const std::vector<T>& a) {
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
  }
  static T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw Error("dimension-mismatch", "dot product of unequal lengths");
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }
  static T norm_sq(const std::vector<T>& a) { return dot(a, a); }
  static std::string describe(const std::vector<T>& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) os << ", ";
      os << value_traits<T>::describe(a[i]);
    }
    os << ")";
    return os.str();
  }
};

template <>
struct point_traits<SparseSeq> {
  using scale_type = Rational;
  static SparseSeq add(const SparseSeq& a, const SparseSeq& b) { return a + b; }
  static SparseSeq scale(const Rational& t, const SparseSeq& a) { return t * a; }
  static Rational dot(const SparseSeq& a, const SparseSeq& b) { return a.dot(b); }
  static Rational norm_sq(const SparseSeq& a) { return a.norm_sq(); }
  static std::string describe(const SparseSeq& a) { return a.describe(); }
};

/// Extended-real-valued function given by evaluation, together with a
/// sampler of points in its effective domain. Domain knowledge lives with
/// whoever builds the oracle.
template <class Point, class Value>
struct FnOracle {
  using point_type = Point;
  using value_type = Value;
  using scale_type = typename point_traits<Point>::scale_type;

  std::string dim;
  std::function<ExtendedReal<Value>(const Point&)> eval;
  std::function<std::vector<Point>(std::size_t count, std::uint64_t seed)> sample_domain;
  bool exact = value_traits<Value>::exact;

  /// Evaluates, attaching the offending point to any failure.
  ExtendedReal<Value> operator()(const Point& p) const {
    try {
      return eval(p);
    } catch (const std::exception& e) {
      throw Error("oracle-failed", "at " + point_traits<Point>::describe(p) + ": " + e.what());
    }
  }
};

/// Approach sequence n -> point, defined for n >= 1.
template <class Point>
struct SequenceWitness {
  std::function<Point(std::size_t)> generator;
  std::string label;

  Point operator()(std::size_t n) const { return generator(n); }
};

} // namespace conelab::convex
