#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "conelab/convex/oracle.hpp"
#include "conelab/core/error.hpp"
#include "conelab/core/random.hpp"
#include "conelab/kretschmer/analytic.hpp"
#include "conelab/kretschmer/discretize.hpp"
#include "conelab/kretschmer/measure.hpp"

namespace conelab::kretschmer {

struct UnboundednessWitness {
  GridD y;                  // eps * ytilde_n on the cells of (eta0, eta1)
  GridQ b;                  // y rounded to 12 decimals
  double analytic_bound = 0; // eta0 (-1 + 2^{n/4} eps), a lower bound for v(y)
  Rational discrete_value;  // exact-mode LP value at b
};

/// Points y_n = eps * ytilde_n near the base point 0 on which v grows like
/// 2^{n/4}: v is unbounded on every ball around 0 intersected with dom v.
inline UnboundednessWitness unboundedness_witness(const Rational& alpha, const Rational& eta0, const Rational& eta1,
                                                  std::size_t level, const Rational& eps, std::size_t grid) {
  if (!(eta0 > 0)) throw Error("precondition", "eta0 must be > 0");
  if (!(eta0 < eta1)) throw Error("precondition", "eta0 must be < eta1");
  if (!(eta1 < 1) || !(eta1 < alpha)) throw Error("precondition", "eta1 must be < min{1, alpha}");
  if (!(eps > 0)) throw Error("precondition", "eps must be > 0");
  const auto part = split_measure(cells_of(grid, eta0, eta1), level);
  const auto yt = build_ytilde(part, grid);

  UnboundednessWitness w;
  w.y = eps.get_d() * yt.y;
  w.b = rationalize(w.y, 12);
  w.analytic_bound = eta0.get_d() * (-1.0 + level_height(level) * eps.get_d());
  w.discrete_value = primal_value(alpha, w.b, Mode::exact);
  return w;
}

struct DiscontinuityRow {
  std::optional<Rational> gamma;  // empty for the unperturbed base point
  Rational perturbation_norm_sq;  // ||indicator([gamma, 1])||^2 = 1 - gamma
  double perturbation_norm = 0;
  Rational discrete_valP;
  Rational analytic_valP;
};

/// The base point indicator([0, delta]) followed by its perturbations
/// indicator([0, delta] u [gamma, 1]): the perturbations shrink to zero in
/// norm while the value stays at alpha, far above the base value delta.
inline std::vector<DiscontinuityRow> discontinuity_scenario(const Rational& alpha, const Rational& delta,
                                                            const std::vector<Rational>& gammas, std::size_t grid) {
  if (!(alpha > 1)) throw Error("precondition", "alpha must be > 1");
  if (!(delta > 0)) throw Error("precondition", "delta must be > 0");
  std::vector<DiscontinuityRow> rows;
  const GridQ base = indicator(grid, 0, delta);
  rows.push_back({std::nullopt, 0, 0.0, primal_value(alpha, base), analytic_values(alpha, OneSided{delta}).valP});
  for (const auto& g : gammas) {
    if (!(delta < g && g < 1)) throw Error("precondition", "need delta < gamma < 1, got gamma = " + format_rational(g));
    const GridQ b = indicator_two_sided(grid, delta, g);
    const Rational nsq = 1 - g;
    rows.push_back({g, nsq, std::sqrt(nsq.get_d()), primal_value(alpha, b),
                    analytic_values(alpha, TwoSided{delta, g}).valP});
  }
  return rows;
}

/// Random grid functions with quarter-integer values in [-2, 2].
inline std::vector<GridQ> sample_grid_functions(std::size_t cells, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<GridQ> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GridQ g(cells);
    for (std::size_t c = 0; c < cells; ++c) g[c] = rng.uniform_rational(-2, 2, 4);
    out.push_back(std::move(g));
  }
  return out;
}

/// The discrete value function b -> optimal value of discretize_primal at a
/// fixed grid; every grid function lies in its domain.
inline convex::FnOracle<GridQ, Rational> oracle(const Rational& alpha, std::size_t cells, Mode mode = Mode::exact) {
  convex::FnOracle<GridQ, Rational> f;
  f.dim = std::to_string(cells);
  f.eval = [alpha, cells, mode](const GridQ& b) -> ExtRational {
    if (b.cells() != cells) throw Error("dimension-mismatch", "grid function has the wrong number of cells");
    return primal_value(alpha, b, mode);
  };
  f.sample_domain = [cells](std::size_t count, std::uint64_t seed) { return sample_grid_functions(cells, count, seed); };
  return f;
}

} // namespace conelab::kretschmer
