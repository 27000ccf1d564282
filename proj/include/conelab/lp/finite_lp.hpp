#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conelab/core/error.hpp"
#include "conelab/core/extended_real.hpp"
#include "conelab/core/rational.hpp"

namespace conelab::lp {

using Vec = std::vector<Rational>;

enum class Direction { min, max };
enum class RowSense { ge, le, eq };
enum class VarBound { nonneg, free };
enum class LPStatus { optimal, infeasible, unbounded };

inline std::string to_string(LPStatus s) {
  switch (s) {
  case LPStatus::optimal: return "optimal";
  case LPStatus::infeasible: return "infeasible";
  default: return "unbounded";
  }
}

/// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec times(const Vec& x) const {
    if (x.size() != cols_) throw Error("dimension-mismatch", "matrix-vector product");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(i, j)) != 0) r[i] += (*this)(i, j) * x[j];
    return r;
  }

  Vec transpose_times(const Vec& y) const {
    if (y.size() != rows_) throw Error("dimension-mismatch", "transposed matrix-vector product");
    Vec r(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (sgn(y[i]) == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) r[j] += (*this)(i, j) * y[i];
    }
    return r;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// direction c'x subject to G x (sense) h, with each variable either >= 0 or free.
struct FiniteLP {
  Direction direction = Direction::min;
  Vec objective;
  Matrix G;
  Vec rhs;
  std::vector<RowSense> sense;
  std::vector<VarBound> bounds;

  std::size_t num_vars() const noexcept { return objective.size(); }
  std::size_t num_rows() const noexcept { return rhs.size(); }

  void validate() const {
    const auto n = objective.size();
    const auto m = rhs.size();
    if (G.rows() != m || G.cols() != n || sense.size() != m || bounds.size() != n)
      throw Error("dimension-mismatch", "objective " + std::to_string(n) + ", rhs " + std::to_string(m) + ", matrix " +
                                            std::to_string(G.rows()) + "x" + std::to_string(G.cols()) + ", senses " +
                                            std::to_string(sense.size()) + ", bounds " + std::to_string(bounds.size()));
  }
};

/// Result of a solve. On optimal, primal and dual are set and verified; on
/// infeasible, farkas is set; on unbounded, primal (a feasible point) and ray
/// are set.
///
/// Dual sign conventions follow the Lagrangian of the stated problem:
///   min: y_i >= 0 on >= rows, <= 0 on <= rows, c - G'y >= 0 on nonneg vars;
///   max: y_i >= 0 on <= rows, <= 0 on >= rows, G'y - c >= 0 on nonneg vars;
/// with equality for free variables and free y_i on equality rows.
struct LPSolution {
  LPStatus status = LPStatus::optimal;
  ExtRational value;
  std::optional<Vec> primal;
  std::optional<Vec> dual;
  std::optional<std::vector<std::size_t>> basis;
  std::optional<Vec> farkas;
  std::optional<Vec> ray;
};

} // namespace conelab::lp
