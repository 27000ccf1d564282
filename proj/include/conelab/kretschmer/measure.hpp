#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "conelab/core/error.hpp"
#include "conelab/kretschmer/grid_fn.hpp"

namespace conelab::kretschmer {

/// Disjoint levels A_1..A_N inside a set of cells A with |A_k| = |A| 2^-k;
/// the last |A| 2^-N cells of A stay unused.
struct MeasurePartition {
  std::vector<std::size_t> base;
  std::vector<std::vector<std::size_t>> levels;
  std::vector<std::size_t> unused;
};

/// Levels are taken from A in order, so A_1 is the first half of A, A_2 the
/// next quarter, and so on.
inline MeasurePartition split_measure(const std::vector<std::size_t>& cells, std::size_t levels) {
  if (levels < 1) throw Error("precondition", "levels must be >= 1");
  const std::size_t size = cells.size();
  if (levels >= 64 || size == 0 || size % (std::size_t{1} << levels) != 0)
    throw Error("grid-too-coarse", std::to_string(size) + " cells cannot be halved " + std::to_string(levels) + " times");
  MeasurePartition part;
  part.base = cells;
  std::size_t pos = 0;
  for (std::size_t k = 1; k <= levels; ++k) {
    const std::size_t len = size >> k;
    part.levels.emplace_back(cells.begin() + static_cast<long>(pos), cells.begin() + static_cast<long>(pos + len));
    pos += len;
  }
  part.unused.assign(cells.begin() + static_cast<long>(pos), cells.end());
  return part;
}

/// Cells of the n-cell grid contained in [lo, hi] (grid-aligned endpoints).
inline std::vector<std::size_t> cells_of(std::size_t n, const Rational& lo, const Rational& hi) {
  std::vector<std::size_t> out;
  for (std::size_t i = grid_node(lo, n); i < grid_node(hi, n); ++i) out.push_back(i);
  return out;
}

struct YTilde {
  GridD y;                         // sum_{k<=N} 2^{k/4} indicator(A_k)
  Rational beta;                   // measure of A
  std::vector<double> norm_sq;     // ||y_k||^2 for k = 1..N, summed cell by cell
  std::vector<double> norm_sq_closed; // (sqrt 2 + 1)(1 - 2^{-k/2}) beta
  double ess_sup = 0;              // 2^{N/4}
};

inline double level_height(std::size_t k) { return std::pow(2.0, static_cast<double>(k) / 4.0); }

inline double ytilde_norm_sq_closed(std::size_t k, const Rational& beta) {
  return (std::sqrt(2.0) + 1.0) * (1.0 - std::pow(2.0, -static_cast<double>(k) / 2.0)) * beta.get_d();
}

inline YTilde build_ytilde(const MeasurePartition& part, std::size_t grid) {
  YTilde out;
  out.y = GridD(grid);
  out.beta = Rational(static_cast<unsigned long>(part.base.size()), static_cast<unsigned long>(grid));
  out.beta.canonicalize();
  double acc = 0;
  for (std::size_t k = 1; k <= part.levels.size(); ++k) {
    const double h = level_height(k);
    for (std::size_t c : part.levels[k - 1]) {
      if (c >= grid) throw Error("precondition", "partition does not fit the grid");
      out.y[c] = h;
      acc += h * h / static_cast<double>(grid);
    }
    out.norm_sq.push_back(acc);
    out.norm_sq_closed.push_back(ytilde_norm_sq_closed(k, out.beta));
  }
  out.ess_sup = level_height(part.levels.size());
  return out;
}

} // namespace conelab::kretschmer
