#pragma once

#include <cstddef>
#include <vector>

#include "conelab/core/error.hpp"
#include "conelab/kretschmer/grid_fn.hpp"

// The operator A(x, r)(t) = int_t^1 x(s) ds + r from L2 x R to L2 and its
// adjoint A* y = (t -> int_0^t y(s) ds, int_0^1 y(s) ds), evaluated exactly
// on piecewise-constant arguments.
namespace conelab::kretschmer {

/// Continuous piecewise-linear function on [0, 1] with breakpoints at the
/// nodes k/n; nodes[k] is the value at k/n.
struct PiecewiseLinear {
  std::vector<Rational> nodes;

  std::size_t cells() const noexcept { return nodes.size() - 1; }

  Rational operator()(const Rational& t) const {
    if (t < 0 || t > 1) throw Error("out-of-range", "t must lie in [0, 1]");
    const Rational n(static_cast<unsigned long>(cells()));
    const Rational pos = t * n;
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), pos.get_num_mpz_t(), pos.get_den_mpz_t());
    const std::size_t i = k.get_ui();
    if (i >= cells()) return nodes.back();
    const Rational frac = pos - Rational(k);
    return nodes[i] + frac * (nodes[i + 1] - nodes[i]);
  }
};

inline PiecewiseLinear apply_A(const GridQ& x, const Rational& r) {
  const std::size_t n = x.cells();
  const Rational nn(static_cast<unsigned long>(n));
  PiecewiseLinear out;
  out.nodes.assign(n + 1, r);
  Rational tail = 0;
  for (std::size_t k = n; k-- > 0;) {
    tail += x[k] / nn;
    out.nodes[k] += tail;
  }
  return out;
}

struct AdjointImage {
  PiecewiseLinear x;
  Rational r;
};

inline AdjointImage apply_A_star(const GridQ& y) {
  const std::size_t n = y.cells();
  const Rational nn(static_cast<unsigned long>(n));
  AdjointImage out;
  out.x.nodes.assign(n + 1, Rational(0));
  for (std::size_t k = 0; k < n; ++k) out.x.nodes[k + 1] = out.x.nodes[k] + y[k] / nn;
  out.r = out.x.nodes[n];
  return out;
}

/// int_0^1 f g for f piecewise linear and g piecewise constant on the same grid
/// (the midpoint rule is exact cell by cell).
inline Rational integrate_product(const PiecewiseLinear& f, const GridQ& g) {
  if (f.cells() != g.cells()) throw Error("dimension-mismatch", "grids differ");
  Rational s = 0;
  for (std::size_t k = 0; k < g.cells(); ++k)
    if (sgn(g[k]) != 0) s += (f.nodes[k] + f.nodes[k + 1]) * g[k];
  return s / Rational(static_cast<unsigned long>(2 * g.cells()));
}

} // namespace conelab::kretschmer
