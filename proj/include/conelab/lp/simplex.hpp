#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "conelab/core/error.hpp"
#include "conelab/lp/certificates.hpp"
#include "conelab/lp/finite_lp.hpp"

namespace conelab::lp {

namespace detail {

/// Two-phase dense-tableau simplex on the internal form
///   min c'x  s.t.  A x >= h, x >= 0,
/// written as  sigma_k (A_k x - s_k) + a_k = sigma_k h_k  with surplus s and
/// one artificial a_k per row. The artificial columns are kept after phase 1
/// (never re-entered) so that duals can be read from their reduced costs.
class Tableau {
public:
  Tableau(const Matrix& A, const Vec& h, const Vec& c)
      : m_(A.rows()), n_(A.cols()), cols_(n_ + 2 * m_), width_(cols_ + 1), cost_(c), sigma_(m_, 1),
        t_((m_ + 1) * width_), basis_(m_) {
    for (std::size_t k = 0; k < m_; ++k) {
      if (sgn(h[k]) < 0) sigma_[k] = -1;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(A(k, j)) != 0) at(k, j) = sigma_[k] * A(k, j);
      at(k, n_ + k) = -sigma_[k];
      at(k, n_ + m_ + k) = 1;
      at(k, cols_) = sigma_[k] * h[k];
      basis_[k] = n_ + m_ + k;
    }
  }

  enum class Outcome { optimal, unbounded };

  /// Phase 1. Returns false when the artificial sum cannot reach zero.
  bool phase1() {
    Vec c1(cols_);
    for (std::size_t k = 0; k < m_; ++k) c1[n_ + m_ + k] = 1;
    load_costs(c1);
    run(cols_);
    if (sgn(at(m_, cols_)) != 0) return false;
    // Artificials still basic sit at level zero; swap them for any structural
    // or surplus column with a nonzero entry in their row.
    for (std::size_t k = 0; k < m_; ++k) {
      if (basis_[k] < n_ + m_) continue;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (sgn(at(k, j)) != 0) {
          pivot(k, j);
          break;
        }
      }
    }
    return true;
  }

  /// Row multipliers w >= 0 with A'w <= 0 and h'w > 0, read from phase 1.
  Vec farkas() const {
    Vec w(m_);
    for (std::size_t k = 0; k < m_; ++k) w[k] = sigma_[k] * (1 - at(m_, n_ + m_ + k));
    return w;
  }

  Outcome phase2() {
    Vec c2(cols_);
    std::copy(cost_.begin(), cost_.end(), c2.begin());
    load_costs(c2);
    entering_ = run(n_ + m_);
    return entering_ ? Outcome::unbounded : Outcome::optimal;
  }

  Vec primal() const {
    Vec x(n_);
    for (std::size_t k = 0; k < m_; ++k)
      if (basis_[k] < n_) x[basis_[k]] = at(k, cols_);
    return x;
  }

  /// Multipliers w >= 0 of the rows A x >= h at the phase 2 optimum.
  Vec dual() const {
    Vec w(m_);
    for (std::size_t k = 0; k < m_; ++k) w[k] = -sigma_[k] * at(m_, n_ + m_ + k);
    return w;
  }

  /// Recession direction from the column that had no leaving row.
  Vec ray() const {
    Vec d(n_);
    const std::size_t q = *entering_;
    if (q < n_) d[q] = 1; // a surplus column may enter too; only structural parts are reported
    for (std::size_t k = 0; k < m_; ++k)
      if (basis_[k] < n_) d[basis_[k]] = -at(k, q);
    return d;
  }

  const std::vector<std::size_t>& basis() const noexcept { return basis_; }
  std::size_t structural() const noexcept { return n_; }

private:
  Rational& at(std::size_t r, std::size_t c) { return t_[r * width_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r * width_ + c]; }

  void load_costs(const Vec& c) {
    for (std::size_t j = 0; j <= cols_; ++j) at(m_, j) = j < cols_ ? c[j] : Rational(0);
    for (std::size_t k = 0; k < m_; ++k) {
      const Rational& cb = c[basis_[k]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(at(k, j)) != 0) at(m_, j) -= cb * at(k, j);
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    const Rational inv = 1 / at(r, q);
    for (std::size_t j = 0; j <= cols_; ++j)
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j)
      if (sgn(at(r, j)) != 0) nz.push_back(j);
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || sgn(at(i, q)) == 0) continue;
      const Rational f = at(i, q);
      for (std::size_t j : nz) at(i, j) -= f * at(r, j);
    }
    basis_[r] = q;
  }

  /// Bland's rule over columns [0, limit). Returns the entering column when
  /// the objective is unbounded below along it.
  std::optional<std::size_t> run(std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> q;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(at(m_, j)) < 0) {
          q = j;
          break;
        }
      }
      if (!q) return std::nullopt;
      std::optional<std::size_t> r;
      Rational best;
      for (std::size_t k = 0; k < m_; ++k) {
        if (sgn(at(k, *q)) <= 0) continue;
        Rational ratio = at(k, cols_) / at(k, *q);
        if (!r || ratio < best || (ratio == best && basis_[k] < basis_[*r])) {
          r = k;
          best = std::move(ratio);
        }
      }
      if (!r) return q;
      pivot(*r, *q);
    }
  }

  std::size_t m_, n_, cols_, width_;
  Vec cost_;
  std::vector<int> sigma_;
  std::vector<Rational> t_;
  std::vector<std::size_t> basis_;
  std::optional<std::size_t> entering_;
};

/// Bookkeeping between a FiniteLP and the internal form.
struct InternalForm {
  Matrix A;
  Vec h;
  Vec c;
  std::vector<std::size_t> pos_col;                 // column of x_j^+
  std::vector<std::optional<std::size_t>> neg_col;  // column of x_j^- for free x_j
  std::vector<std::vector<std::pair<std::size_t, int>>> rows_of; // internal rows and orientation per original row
};

inline InternalForm to_internal(const FiniteLP& lp) {
  InternalForm f;
  const std::size_t n = lp.num_vars();
  std::size_t cols = 0;
  f.pos_col.resize(n);
  f.neg_col.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    f.pos_col[j] = cols++;
    if (lp.bounds[j] == VarBound::free) f.neg_col[j] = cols++;
  }
  std::size_t rows = 0;
  f.rows_of.resize(lp.num_rows());
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    switch (lp.sense[i]) {
    case RowSense::ge: f.rows_of[i] = {{rows++, 1}}; break;
    case RowSense::le: f.rows_of[i] = {{rows++, -1}}; break;
    default: f.rows_of[i] = {{rows, 1}, {rows + 1, -1}}; rows += 2;
    }
  }
  f.A = Matrix(rows, cols);
  f.h.assign(rows, Rational(0));
  f.c.assign(cols, Rational(0));
  const int dir = lp.direction == Direction::min ? 1 : -1;
  for (std::size_t j = 0; j < n; ++j) {
    f.c[f.pos_col[j]] = dir * lp.objective[j];
    if (f.neg_col[j]) f.c[*f.neg_col[j]] = -dir * lp.objective[j];
  }
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    for (const auto& [k, o] : f.rows_of[i]) {
      f.h[k] = o * lp.rhs[i];
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& g = lp.G(i, j);
        if (sgn(g) == 0) continue;
        f.A(k, f.pos_col[j]) = o * g;
        if (f.neg_col[j]) f.A(k, *f.neg_col[j]) = -o * g;
      }
    }
  }
  return f;
}

inline Vec from_internal_primal(const InternalForm& f, const Vec& xi) {
  Vec x(f.pos_col.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = xi[f.pos_col[j]];
    if (f.neg_col[j]) x[j] -= xi[*f.neg_col[j]];
  }
  return x;
}

inline Vec from_internal_rows(const InternalForm& f, const Vec& w) {
  Vec y(f.rows_of.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    for (const auto& [k, o] : f.rows_of[i]) y[i] += o * w[k];
  return y;
}

} // namespace detail

/// Exact optimum of a finite LP by two-phase simplex with Bland's rule.
/// Every returned certificate is re-verified against the input.
inline LPSolution solve(const FiniteLP& lp) {
  lp.validate();
  const auto f = detail::to_internal(lp);
  detail::Tableau tab(f.A, f.h, f.c);
  LPSolution sol;
  auto fail = [](const Check& c) { throw Error("internal", "simplex certificate failed: " + c.name + " " + c.detail); };

  if (!tab.phase1()) {
    sol.status = LPStatus::infeasible;
    sol.value = lp.direction == Direction::min ? ExtRational::pos_inf() : ExtRational::neg_inf();
    sol.farkas = detail::from_internal_rows(f, tab.farkas());
    if (auto c = verify_farkas(lp, *sol.farkas); !c.pass) fail(c);
    return sol;
  }

  const auto outcome = tab.phase2();
  sol.primal = detail::from_internal_primal(f, tab.primal());
  if (auto c = verify_primal_feasible(lp, *sol.primal); !c.pass) fail(c);

  if (outcome == detail::Tableau::Outcome::unbounded) {
    sol.status = LPStatus::unbounded;
    sol.value = lp.direction == Direction::min ? ExtRational::neg_inf() : ExtRational::pos_inf();
    sol.ray = detail::from_internal_primal(f, tab.ray());
    if (auto c = verify_ray(lp, *sol.ray); !c.pass) fail(c);
    return sol;
  }

  Vec y = detail::from_internal_rows(f, tab.dual());
  if (lp.direction == Direction::max)
    for (auto& v : y) v = -v;
  sol.status = LPStatus::optimal;
  sol.value = dot(lp.objective, *sol.primal);
  sol.dual = std::move(y);
  std::vector<std::size_t> basic;
  for (std::size_t col : tab.basis()) {
    if (col >= tab.structural()) continue;
    for (std::size_t j = 0; j < f.pos_col.size(); ++j)
      if (f.pos_col[j] == col || f.neg_col[j] == col) basic.push_back(j);
  }
  std::sort(basic.begin(), basic.end());
  sol.basis = std::move(basic);
  if (auto c = verify_optimal(lp, *sol.primal, *sol.dual); !c.pass) fail(c);
  return sol;
}

} // namespace conelab::lp
