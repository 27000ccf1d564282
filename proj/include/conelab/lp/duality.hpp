#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conelab/convex/oracle.hpp"
#include "conelab/core/check.hpp"
#include "conelab/core/error.hpp"
#include "conelab/lp/finite_lp.hpp"

namespace conelab::lp {

namespace detail {

/// Rows whose multiplier must be <= 0 in the dual; those columns are negated
/// in dual_of so that every dual variable is either >= 0 or free.
inline bool nonpositive_multiplier(Direction d, RowSense s) {
  return s != RowSense::eq && ((d == Direction::min) != (s == RowSense::ge));
}

} // namespace detail

/// The LP dual, with one variable per row of lp (negated where the multiplier
/// is nonpositive) and one row per variable of lp.
inline FiniteLP dual_of(const FiniteLP& lp) {
  lp.validate();
  const std::size_t m = lp.num_rows(), n = lp.num_vars();
  FiniteLP d;
  d.direction = lp.direction == Direction::min ? Direction::max : Direction::min;
  d.objective.resize(m);
  d.bounds.resize(m);
  d.G = Matrix(n, m);
  d.rhs = lp.objective;
  d.sense.resize(n);
  for (std::size_t i = 0; i < m; ++i) {
    const int flip = detail::nonpositive_multiplier(lp.direction, lp.sense[i]) ? -1 : 1;
    d.objective[i] = flip * lp.rhs[i];
    d.bounds[i] = lp.sense[i] == RowSense::eq ? VarBound::free : VarBound::nonneg;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(lp.G(i, j)) != 0) d.G(j, i) = flip * lp.G(i, j);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.bounds[j] == VarBound::free)
      d.sense[j] = RowSense::eq;
    else
      d.sense[j] = lp.direction == Direction::min ? RowSense::le : RowSense::ge;
  }
  return d;
}

/// Maps a primal point of dual_of(lp) back to row multipliers of lp in the
/// sign convention of LPSolution::dual.
inline Vec multipliers_from_dual(const FiniteLP& lp, const Vec& u) {
  if (u.size() != lp.num_rows()) throw Error("dimension-mismatch", "multiplier vector length");
  Vec y(u);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (detail::nonpositive_multiplier(lp.direction, lp.sense[i])) y[i] = -y[i];
  return y;
}

/// Primal and dual outcomes of one instance with optional closed-form references.
struct DualityReport {
  std::string scenario;
  LPSolution primal;
  LPSolution dual;
  std::optional<ExtRational> analytic_valP;
  std::optional<ExtRational> analytic_valD;
  std::optional<ExtRational> gap;
  std::vector<Check> checks;
};

/// primal - dual in extended arithmetic; empty when the difference is undefined.
inline std::optional<ExtRational> duality_gap(const LPSolution& primal, const LPSolution& dual) {
  try {
    return primal.value - dual.value;
  } catch (const Error&) {
    return std::nullopt;
  }
}

template <class Point, class Value>
struct SubgradientWitness {
  Point b_prime;
  ExtendedReal<Value> lhs;  // value at b'
  Value rhs;                // value at b + <b' - b, ystar>
};

template <class Point, class Value>
struct SubgradientResult {
  bool pass = true;
  std::vector<SubgradientWitness<Point, Value>> witnesses;
};

/// Subgradient inequality v(b') >= v(b) + <b' - b, ystar> - tol over the given
/// perturbations. The pairing defaults to the point type's dot product; a
/// caller can pass a weighted one (for instance the L2 pairing of grid functions).
template <class Point, class Value>
SubgradientResult<Point, Value> subgradient_check(
    const std::function<ExtendedReal<Value>(const Point&)>& value_at, const Point& b, const Point& ystar,
    const std::vector<Point>& perturbations, const Value& tol,
    std::function<Value(const Point&, const Point&)> pairing = {}) {
  using PT = convex::point_traits<Point>;
  if (!pairing) pairing = [](const Point& u, const Point& v) { return Value(PT::dot(u, v)); };
  const auto vb = value_at(b);
  if (!vb.is_finite()) throw Error("precondition", "value at b must be finite");
  SubgradientResult<Point, Value> out;
  const Point minus_b = PT::scale(-1, b);
  for (const auto& bp : perturbations) {
    const auto lhs = value_at(bp);
    if (lhs.is_pos_inf()) continue;
    const Value rhs = vb.value() + pairing(PT::add(bp, minus_b), ystar);
    if (lhs.is_neg_inf() || lhs.value() < Value(rhs - tol)) {
      out.pass = false;
      out.witnesses.push_back({bp, lhs, rhs});
    }
  }
  return out;
}

} // namespace conelab::lp
