#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conelab/core/check.hpp"
#include "conelab/core/error.hpp"
#include "conelab/kretschmer/grid_fn.hpp"
#include "conelab/lp/simplex.hpp"

// Finite LPs bracketing the continuum problem
//   min int t x(t) dt + alpha r  s.t.  x >= 0, r >= 0, A(x, r) >= b
// and its dual
//   max <b, z>  s.t.  z >= 0, int_0^t z <= t for all t, int_0^1 z <= alpha,
// for piecewise-constant x and z on an n-cell grid.
namespace conelab::kretschmer {

enum class Mode { exact, sampled };

inline std::string to_string(Mode m) { return m == Mode::exact ? "exact" : "sampled"; }

struct KretschmerProblem {
  Rational alpha;
  GridQ b;
  Mode mode = Mode::exact;
};

namespace detail {

inline Rational nat(std::size_t k) { return Rational(static_cast<unsigned long>(k)); }

/// Cost of x on cell j (0-based): int over the cell of t dt = (2j+1)/(2n^2).
inline Rational cell_cost(std::size_t j, std::size_t n) { return nat(2 * j + 1) / nat(2 * n * n); }

/// Does x on cell j enter the constraint of cell c? Exact mode evaluates
/// A(x, r) at the right end of cell c, sampled mode at the left end.
inline bool serves(Mode mode, std::size_t j, std::size_t c) { return mode == Mode::exact ? j > c : j >= c; }

inline void check_alpha(const Rational& alpha) {
  if (sgn(alpha) < 0) throw Error("out-of-range", "alpha must be >= 0");
}

} // namespace detail

/// Variables x_1..x_n then r; one >= row per cell.
inline lp::FiniteLP discretize_primal(const KretschmerProblem& p) {
  detail::check_alpha(p.alpha);
  const std::size_t n = p.b.cells();
  const Rational nn = detail::nat(n);
  lp::FiniteLP lp;
  lp.direction = lp::Direction::min;
  lp.objective.resize(n + 1);
  for (std::size_t j = 0; j < n; ++j) lp.objective[j] = detail::cell_cost(j, n);
  lp.objective[n] = p.alpha;
  lp.G = lp::Matrix(n, n + 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t j = 0; j < n; ++j)
      if (detail::serves(p.mode, j, c)) lp.G(c, j) = 1 / nn;
    lp.G(c, n) = 1;
  }
  lp.rhs = p.b.values();
  lp.sense.assign(n, lp::RowSense::ge);
  lp.bounds.assign(n + 1, lp::VarBound::nonneg);
  return lp;
}

/// Variables z_1..z_n; prefix rows sum_{j<=i} z_j/n <= i/n, then the alpha row.
inline lp::FiniteLP discretize_dual(const KretschmerProblem& p) {
  detail::check_alpha(p.alpha);
  const std::size_t n = p.b.cells();
  const Rational nn = detail::nat(n);
  lp::FiniteLP lp;
  lp.direction = lp::Direction::max;
  lp.objective.resize(n);
  for (std::size_t j = 0; j < n; ++j) lp.objective[j] = p.b[j] / nn;
  lp.G = lp::Matrix(n + 1, n);
  lp.rhs.resize(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) lp.G(i, j) = 1 / nn;
    lp.rhs[i] = detail::nat(i + 1) / nn;
  }
  for (std::size_t j = 0; j < n; ++j) lp.G(n, j) = 1 / nn;
  lp.rhs[n] = p.alpha;
  lp.sense.assign(n + 1, lp::RowSense::le);
  lp.bounds.assign(n, lp::VarBound::nonneg);
  return lp;
}

/// Cells c with b_c > 0 and b_c > b_k for every later cell k, ascending.
/// Only these rows of the primal can bind, and only these cells can carry
/// dual mass at an optimum.
inline std::vector<std::size_t> suffix_records(const GridQ& b) {
  std::vector<std::size_t> rec;
  Rational best = 0;
  for (std::size_t c = b.cells(); c-- > 0;) {
    if (b[c] > best) {
      rec.push_back(c);
      best = b[c];
    }
  }
  return {rec.rbegin(), rec.rend()};
}

struct PrimalSolution {
  Rational value;
  GridQ x;
  Rational r;
  lp::Vec multipliers;          // one per cell row of discretize_primal
  std::size_t reduced_rows = 0;
  std::size_t reduced_vars = 0;
};

struct DualSolution {
  Rational value;
  GridQ z;
  lp::Vec multipliers;          // prefix rows, then the alpha row
  std::size_t reduced_rows = 0;
  std::size_t reduced_vars = 0;
};

/// Exact optimality of (x, r) with multipliers y for discretize_primal(p),
/// checked in O(n) with prefix and suffix sums.
inline Check certify_primal(const KretschmerProblem& p, const GridQ& x, const Rational& r, const lp::Vec& y) {
  const std::size_t n = p.b.cells();
  const Rational nn = detail::nat(n);
  auto bad = [](std::string why) { return Check{"primal-certificate", false, std::move(why)}; };
  if (x.cells() != n || y.size() != n) return bad("wrong lengths");
  if (sgn(r) < 0) return bad("r < 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) < 0) return bad("x < 0 at cell " + std::to_string(i));
    if (sgn(y[i]) < 0) return bad("multiplier < 0 at row " + std::to_string(i));
  }
  // Primal rows: tail sums of x.
  Rational tail = 0;
  for (std::size_t c = n; c-- > 0;) {
    if (p.mode == Mode::sampled) tail += x[c] / nn;
    if (tail + r < p.b[c]) return bad("row " + std::to_string(c) + " violated");
    if (p.mode == Mode::exact) tail += x[c] / nn;
  }
  // Reduced costs: column j collects the multipliers of the rows it serves.
  Rational head = 0, total = 0, primal_obj = p.alpha * r, dual_obj = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (p.mode == Mode::sampled) head += y[j];
    if (detail::cell_cost(j, n) - head / nn < 0) return bad("column " + std::to_string(j) + " has negative reduced cost");
    if (p.mode == Mode::exact) head += y[j];
    if (sgn(x[j]) != 0) primal_obj += detail::cell_cost(j, n) * x[j];
    if (sgn(y[j]) != 0) dual_obj += p.b[j] * y[j];
  }
  total = head;
  if (p.alpha - total < 0) return bad("column r has negative reduced cost");
  if (primal_obj != dual_obj) return bad("objectives differ");
  return {"primal-certificate", true, ""};
}

/// Exact optimality of z with multipliers w for discretize_dual(p), in O(n).
inline Check certify_dual(const KretschmerProblem& p, const GridQ& z, const lp::Vec& w) {
  const std::size_t n = p.b.cells();
  const Rational nn = detail::nat(n);
  auto bad = [](std::string why) { return Check{"dual-certificate", false, std::move(why)}; };
  if (z.cells() != n || w.size() != n + 1) return bad("wrong lengths");
  for (std::size_t i = 0; i <= n; ++i)
    if (sgn(w[i]) < 0) return bad("multiplier < 0 at row " + std::to_string(i));
  Rational head = 0, primal_obj = 0, dual_obj = w[n] * p.alpha;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(z[i]) < 0) return bad("z < 0 at cell " + std::to_string(i));
    head += z[i] / nn;
    if (head > detail::nat(i + 1) / nn) return bad("prefix row " + std::to_string(i) + " violated");
    primal_obj += p.b[i] * z[i] / nn;
    if (sgn(w[i]) != 0) dual_obj += w[i] * detail::nat(i + 1) / nn;
  }
  if (head > p.alpha) return bad("alpha row violated");
  Rational tail = w[n];
  for (std::size_t j = n; j-- > 0;) {
    tail += w[j];
    if (tail / nn < p.b[j] / nn) return bad("column " + std::to_string(j) + " has negative reduced cost");
  }
  if (primal_obj != dual_obj) return bad("objectives differ");
  return {"dual-certificate", true, ""};
}

/// Optimum of discretize_primal(p). Rows that cannot bind and columns
/// dominated by a cheaper column serving the same rows are dropped before the
/// simplex runs; the lifted solution is certified against the full LP.
inline PrimalSolution solve_primal(const KretschmerProblem& p) {
  detail::check_alpha(p.alpha);
  const std::size_t n = p.b.cells();
  const Rational nn = detail::nat(n);
  const auto rec = suffix_records(p.b);

  std::vector<std::size_t> cols;
  for (std::size_t c : rec) {
    const std::size_t j = p.mode == Mode::exact ? c + 1 : c;
    if (j < n) cols.push_back(j);
  }
  lp::FiniteLP red;
  red.direction = lp::Direction::min;
  for (std::size_t j : cols) red.objective.push_back(detail::cell_cost(j, n));
  red.objective.push_back(p.alpha);
  red.G = lp::Matrix(rec.size(), cols.size() + 1);
  for (std::size_t q = 0; q < rec.size(); ++q) {
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (detail::serves(p.mode, cols[k], rec[q])) red.G(q, k) = 1 / nn;
    red.G(q, cols.size()) = 1;
    red.rhs.push_back(p.b[rec[q]]);
  }
  red.sense.assign(rec.size(), lp::RowSense::ge);
  red.bounds.assign(cols.size() + 1, lp::VarBound::nonneg);

  const auto sol = lp::solve(red);
  if (sol.status != lp::LPStatus::optimal) throw Error("internal", "reduced primal is not optimal");

  PrimalSolution out;
  out.x = GridQ(n);
  for (std::size_t k = 0; k < cols.size(); ++k) out.x[cols[k]] = (*sol.primal)[k];
  out.r = (*sol.primal)[cols.size()];
  out.multipliers.assign(n, Rational(0));
  for (std::size_t q = 0; q < rec.size(); ++q) out.multipliers[rec[q]] = (*sol.dual)[q];
  out.value = sol.value.value();
  out.reduced_rows = rec.size();
  out.reduced_vars = cols.size() + 1;
  if (auto c = certify_primal(p, out.x, out.r, out.multipliers); !c.pass) throw Error("internal", c.detail);
  return out;
}

/// Optimum of discretize_dual(p), reduced and certified like solve_primal.
inline DualSolution solve_dual(const KretschmerProblem& p) {
  detail::check_alpha(p.alpha);
  const std::size_t n = p.b.cells();
  const Rational nn = detail::nat(n);
  const auto rec = suffix_records(p.b);
  const std::size_t k = rec.size();

  lp::FiniteLP red;
  red.direction = lp::Direction::max;
  for (std::size_t c : rec) red.objective.push_back(p.b[c] / nn);
  red.G = lp::Matrix(k + 1, k);
  for (std::size_t q = 0; q < k; ++q) {
    for (std::size_t t = 0; t <= q; ++t) red.G(q, t) = 1 / nn;
    red.rhs.push_back(detail::nat(rec[q] + 1) / nn);
  }
  for (std::size_t t = 0; t < k; ++t) red.G(k, t) = 1 / nn;
  red.rhs.push_back(p.alpha);
  red.sense.assign(k + 1, lp::RowSense::le);
  red.bounds.assign(k, lp::VarBound::nonneg);

  const auto sol = lp::solve(red);
  if (sol.status != lp::LPStatus::optimal) throw Error("internal", "reduced dual is not optimal");

  DualSolution out;
  out.z = GridQ(n);
  for (std::size_t q = 0; q < k; ++q) out.z[rec[q]] = (*sol.primal)[q];
  out.multipliers.assign(n + 1, Rational(0));
  for (std::size_t q = 0; q < k; ++q) out.multipliers[rec[q]] = (*sol.dual)[q];
  out.multipliers[n] = (*sol.dual)[k];
  out.value = sol.value.value();
  out.reduced_rows = k + 1;
  out.reduced_vars = k;
  if (auto c = certify_dual(p, out.z, out.multipliers); !c.pass) throw Error("internal", c.detail);
  return out;
}

inline Rational primal_value(const Rational& alpha, const GridQ& b, Mode mode = Mode::exact) {
  return solve_primal({alpha, b, mode}).value;
}

inline Rational dual_value(const Rational& alpha, const GridQ& b) { return solve_dual({alpha, b, Mode::exact}).value; }

} // namespace conelab::kretschmer
