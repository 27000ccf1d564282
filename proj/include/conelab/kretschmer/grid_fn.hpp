#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "conelab/convex/oracle.hpp"
#include "conelab/core/error.hpp"
#include "conelab/core/rational.hpp"

namespace conelab::kretschmer {

/// Piecewise-constant function on the uniform partition of [0, 1] into n
/// cells; value i (0-based) holds on [i/n, (i+1)/n).
template <class T>
class GridFn {
public:
  GridFn() = default;
  explicit GridFn(std::size_t cells, T fill = T(0)) : values_(cells, fill) {
    if (cells < 1) throw Error("precondition", "a grid function needs at least one cell");
  }
  explicit GridFn(std::vector<T> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error("precondition", "a grid function needs at least one cell");
  }

  std::size_t cells() const noexcept { return values_.size(); }
  const std::vector<T>& values() const noexcept { return values_; }
  T& operator[](std::size_t i) { return values_[i]; }
  const T& operator[](std::size_t i) const { return values_[i]; }

  T ess_sup() const { return *std::max_element(values_.begin(), values_.end()); }

  T norm_sq() const { return inner(*this, *this); }

  friend GridFn operator+(GridFn a, const GridFn& b) {
    a.require_same(b);
    for (std::size_t i = 0; i < a.cells(); ++i) a.values_[i] += b.values_[i];
    return a;
  }
  friend GridFn operator-(GridFn a, const GridFn& b) {
    a.require_same(b);
    for (std::size_t i = 0; i < a.cells(); ++i) a.values_[i] -= b.values_[i];
    return a;
  }
  friend GridFn operator*(const T& t, GridFn a) {
    for (auto& v : a.values_) v *= t;
    return a;
  }
  friend bool operator==(const GridFn& a, const GridFn& b) { return a.values_ == b.values_; }

  /// Same function on a grid with factor times as many cells.
  GridFn refine(std::size_t factor) const {
    if (factor < 1) throw Error("precondition", "refinement factor must be >= 1");
    std::vector<T> v;
    v.reserve(cells() * factor);
    for (const auto& x : values_) v.insert(v.end(), factor, x);
    return GridFn(std::move(v));
  }

  void require_same(const GridFn& o) const {
    if (cells() != o.cells())
      throw Error("dimension-mismatch", std::to_string(cells()) + " vs " + std::to_string(o.cells()) + " cells");
  }

private:
  std::vector<T> values_;
};

using GridQ = GridFn<Rational>;
using GridD = GridFn<double>;

/// L2 inner product: sum a_i b_i / n.
template <class T>
T inner(const GridFn<T>& a, const GridFn<T>& b) {
  a.require_same(b);
  T s = 0;
  for (std::size_t i = 0; i < a.cells(); ++i) s += a[i] * b[i];
  if constexpr (std::is_same_v<T, Rational>)
    return s / Rational(static_cast<unsigned long>(a.cells()));
  else
    return s / static_cast<T>(a.cells());
}

/// Index of the grid node at t, or an alignment error.
inline std::size_t grid_node(const Rational& t, std::size_t cells) {
  const Rational k = t * Rational(static_cast<unsigned long>(cells));
  if (k.get_den() != 1 || sgn(k) < 0 || k > Rational(static_cast<unsigned long>(cells)))
    throw Error("misaligned", format_rational(t) + " is not a node of the " + std::to_string(cells) + "-cell grid");
  return k.get_num().get_ui();
}

/// Indicator of [lo, hi] with grid-aligned endpoints.
inline GridQ indicator(std::size_t cells, const Rational& lo, const Rational& hi) {
  const std::size_t a = grid_node(lo, cells), b = grid_node(hi, cells);
  if (a > b) throw Error("precondition", "empty interval");
  GridQ g(cells);
  for (std::size_t i = a; i < b; ++i) g[i] = 1;
  return g;
}

/// Indicator of [0, delta] union [gamma, 1]; delta = gamma = 0 gives the constant 1.
inline GridQ indicator_two_sided(std::size_t cells, const Rational& delta, const Rational& gamma) {
  GridQ g = indicator(cells, 0, delta);
  const std::size_t c = grid_node(gamma, cells);
  for (std::size_t i = c; i < cells; ++i) g[i] = 1;
  return g;
}

inline GridQ rationalize(const GridD& g, int digits = 12) {
  std::vector<Rational> v;
  v.reserve(g.cells());
  for (double x : g.values()) v.push_back(conelab::rationalize(x, digits));
  return GridQ(std::move(v));
}

inline GridD to_double(const GridQ& g) {
  std::vector<double> v;
  v.reserve(g.cells());
  for (const auto& x : g.values()) v.push_back(x.get_d());
  return GridD(std::move(v));
}

/// CSV form: a header line "cells=n" followed by one rational per line.
inline void write_csv(std::ostream& os, const GridQ& g) {
  os << "cells=" << g.cells() << "\n";
  for (const auto& v : g.values()) os << format_rational(v) << "\n";
}

inline GridQ read_csv(std::istream& is) {
  std::string line;
  auto next = [&]() {
    while (std::getline(is, line)) {
      line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next() || line.rfind("cells=", 0) != 0) throw Error("bad-grid-file", "missing 'cells=n' header");
  std::size_t n = 0;
  try {
    n = std::stoul(line.substr(6));
  } catch (const std::exception&) {
    throw Error("bad-grid-file", "bad header '" + line + "'");
  }
  if (n < 1) throw Error("bad-grid-file", "cells must be >= 1");
  std::vector<Rational> v;
  while (next()) v.push_back(parse_rational(line));
  if (v.size() != n)
    throw Error("bad-grid-file", "header says " + std::to_string(n) + " cells, found " + std::to_string(v.size()));
  return GridQ(std::move(v));
}

} // namespace conelab::kretschmer

namespace conelab::convex {

template <>
struct point_traits<kretschmer::GridQ> {
  using scale_type = Rational;
  static kretschmer::GridQ add(const kretschmer::GridQ& a, const kretschmer::GridQ& b) { return a + b; }
  static kretschmer::GridQ scale(const Rational& t, const kretschmer::GridQ& a) { return t * a; }
  static Rational dot(const kretschmer::GridQ& a, const kretschmer::GridQ& b) { return inner(a, b); }
  static Rational norm_sq(const kretschmer::GridQ& a) { return a.norm_sq(); }
  static std::string describe(const kretschmer::GridQ& a) {
    std::ostringstream os;
    os << "grid[" << a.cells() << "](";
    const std::size_t shown = std::min<std::size_t>(a.cells(), 8);
    for (std::size_t i = 0; i < shown; ++i) os << (i ? ", " : "") << format_rational(a[i]);
    if (shown < a.cells()) os << ", ...";
    os << ")";
    return os.str();
  }
};

} // namespace conelab::convex
