#pragma once

#include <cstddef>
#include <string>

#include "conelab/core/check.hpp"
#include "conelab/lp/finite_lp.hpp"

// Exact re-verification of solver output from the LP data alone.
namespace conelab::lp {

namespace detail {

inline bool row_ok(RowSense s, const Rational& lhs, const Rational& rhs) {
  switch (s) {
  case RowSense::ge: return lhs >= rhs;
  case RowSense::le: return lhs <= rhs;
  default: return lhs == rhs;
  }
}

/// Sign a dual multiplier must have on a row; 0 means unrestricted.
inline int dual_sign(Direction d, RowSense s) {
  if (s == RowSense::eq) return 0;
  const bool ge = s == RowSense::ge;
  return (d == Direction::min) == ge ? 1 : -1;
}

inline bool sign_ok(int required, const Rational& v) {
  return required == 0 || (required > 0 ? sgn(v) >= 0 : sgn(v) <= 0);
}

} // namespace detail

inline Check verify_primal_feasible(const FiniteLP& lp, const Vec& x) {
  lp.validate();
  if (x.size() != lp.num_vars()) return {"primal-feasible", false, "wrong length"};
  for (std::size_t j = 0; j < x.size(); ++j)
    if (lp.bounds[j] == VarBound::nonneg && sgn(x[j]) < 0)
      return {"primal-feasible", false, "x[" + std::to_string(j) + "] < 0"};
  const Vec gx = lp.G.times(x);
  for (std::size_t i = 0; i < gx.size(); ++i)
    if (!detail::row_ok(lp.sense[i], gx[i], lp.rhs[i]))
      return {"primal-feasible", false, "row " + std::to_string(i) + " violated"};
  return {"primal-feasible", true, ""};
}

inline Check verify_dual_feasible(const FiniteLP& lp, const Vec& y) {
  lp.validate();
  if (y.size() != lp.num_rows()) return {"dual-feasible", false, "wrong length"};
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!detail::sign_ok(detail::dual_sign(lp.direction, lp.sense[i]), y[i]))
      return {"dual-feasible", false, "y[" + std::to_string(i) + "] has the wrong sign"};
  const Vec gty = lp.G.transpose_times(y);
  for (std::size_t j = 0; j < gty.size(); ++j) {
    Rational slack = lp.objective[j] - gty[j];
    if (lp.direction == Direction::max) slack = -slack;
    const bool ok = lp.bounds[j] == VarBound::free ? sgn(slack) == 0 : sgn(slack) >= 0;
    if (!ok) return {"dual-feasible", false, "column " + std::to_string(j) + " violated"};
  }
  return {"dual-feasible", true, ""};
}

/// Both feasibility checks and exact equality c'x = h'y.
inline Check verify_optimal(const FiniteLP& lp, const Vec& x, const Vec& y) {
  if (auto c = verify_primal_feasible(lp, x); !c.pass) return {"optimal", false, c.detail};
  if (auto c = verify_dual_feasible(lp, y); !c.pass) return {"optimal", false, c.detail};
  if (dot(lp.objective, x) != dot(lp.rhs, y)) return {"optimal", false, "objective values differ"};
  return {"optimal", true, ""};
}

/// y with the sign pattern of a nonnegative combination of the rows (written
/// as >= inequalities), G'y <= 0 on nonneg columns, = 0 on free columns, and
/// h'y > 0 proves that no x satisfies the constraints.
inline Check verify_farkas(const FiniteLP& lp, const Vec& y) {
  lp.validate();
  if (y.size() != lp.num_rows()) return {"farkas", false, "wrong length"};
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!detail::sign_ok(detail::dual_sign(Direction::min, lp.sense[i]), y[i]))
      return {"farkas", false, "y[" + std::to_string(i) + "] has the wrong sign"};
  const Vec gty = lp.G.transpose_times(y);
  for (std::size_t j = 0; j < gty.size(); ++j) {
    const bool ok = lp.bounds[j] == VarBound::free ? sgn(gty[j]) == 0 : sgn(gty[j]) <= 0;
    if (!ok) return {"farkas", false, "column " + std::to_string(j) + " violated"};
  }
  if (sgn(dot(lp.rhs, y)) <= 0) return {"farkas", false, "h'y is not positive"};
  return {"farkas", true, ""};
}

/// Recession direction d that keeps feasibility and strictly improves the objective.
inline Check verify_ray(const FiniteLP& lp, const Vec& d) {
  lp.validate();
  if (d.size() != lp.num_vars()) return {"ray", false, "wrong length"};
  for (std::size_t j = 0; j < d.size(); ++j)
    if (lp.bounds[j] == VarBound::nonneg && sgn(d[j]) < 0) return {"ray", false, "d[" + std::to_string(j) + "] < 0"};
  const Vec gd = lp.G.times(d);
  for (std::size_t i = 0; i < gd.size(); ++i)
    if (!detail::row_ok(lp.sense[i], gd[i], Rational(0))) return {"ray", false, "row " + std::to_string(i) + " violated"};
  const int s = sgn(dot(lp.objective, d));
  if (lp.direction == Direction::min ? s >= 0 : s <= 0) return {"ray", false, "objective does not improve"};
  return {"ray", true, ""};
}

} // namespace conelab::lp
