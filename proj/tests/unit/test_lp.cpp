#include <gtest/gtest.h>

#include <cmath>
#include <optional>

#include "conelab/core/random.hpp"
#include "conelab/lp/certificates.hpp"
#include "conelab/lp/duality.hpp"
#include "conelab/lp/simplex.hpp"

using namespace conelab;
using namespace conelab::lp;

namespace {

FiniteLP make(Direction d, Vec c, std::vector<Vec> rows, Vec h, std::vector<RowSense> s, std::vector<VarBound> b = {}) {
  FiniteLP lp;
  lp.direction = d;
  lp.objective = std::move(c);
  lp.G = Matrix(rows.size(), lp.objective.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) lp.G(i, j) = rows[i][j];
  lp.rhs = std::move(h);
  lp.sense = std::move(s);
  lp.bounds = b.empty() ? std::vector<VarBound>(lp.objective.size(), VarBound::nonneg) : std::move(b);
  return lp;
}

/// Feasible and bounded by construction: x0 satisfies the rows and y0 is dual feasible.
FiniteLP random_instance(Rng& rng) {
  const std::size_t m = static_cast<std::size_t>(rng.uniform_int(1, 5));
  const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 5));
  FiniteLP lp;
  lp.direction = rng.uniform_int(0, 1) ? Direction::min : Direction::max;
  lp.G = Matrix(m, n);
  lp.bounds.resize(n);
  Vec x0(n);
  for (std::size_t j = 0; j < n; ++j) {
    lp.bounds[j] = rng.uniform_int(0, 4) == 0 ? VarBound::free : VarBound::nonneg;
    x0[j] = lp.bounds[j] == VarBound::free ? rng.uniform_rational(-2, 2, 2) : rng.uniform_rational(0, 2, 2);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) lp.G(i, j) = rng.uniform_int(-3, 3);
  const Vec gx = lp.G.times(x0);
  Vec y0(m);
  for (std::size_t i = 0; i < m; ++i) {
    const long kind = rng.uniform_int(0, 2);
    lp.sense.push_back(kind == 0 ? RowSense::ge : kind == 1 ? RowSense::le : RowSense::eq);
    const Rational slack = rng.uniform_rational(0, 2, 2);
    lp.rhs.push_back(kind == 0 ? Rational(gx[i] - slack) : kind == 1 ? Rational(gx[i] + slack) : gx[i]);
    const int s = lp.sense[i] == RowSense::eq ? 0 : ((lp.direction == Direction::min) == (lp.sense[i] == RowSense::ge) ? 1 : -1);
    y0[i] = s == 0 ? rng.uniform_rational(-2, 2, 2) : Rational(s * rng.uniform_rational(0, 2, 2));
  }
  const Vec gty = lp.G.transpose_times(y0);
  lp.objective.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational s = lp.bounds[j] == VarBound::free ? Rational(0) : rng.uniform_rational(0, 2, 2);
    lp.objective[j] = lp.direction == Direction::min ? Rational(gty[j] + s) : Rational(gty[j] - s);
  }
  return lp;
}

} // namespace

TEST(Solve, OneVariable) {
  const auto lp = make(Direction::min, {1}, {{1}}, {1}, {RowSense::ge});
  const auto s = solve(lp);
  ASSERT_EQ(s.status, LPStatus::optimal);
  EXPECT_EQ(s.value, ExtRational(Rational(1)));
  EXPECT_EQ(*s.dual, Vec{1});
}

TEST(Solve, MatchesVertexEnumeration) {
  // min x1 + x2, x1 + 2x2 >= 2, 2x1 + x2 >= 2, x >= 0.
  const auto lp = make(Direction::min, {1, 1}, {{1, 2}, {2, 1}}, {2, 2}, {RowSense::ge, RowSense::ge});
  // Oracle: every pair of tight constraints among the 2 rows and 2 bounds.
  std::vector<std::pair<Vec, Rational>> lines{{{1, 2}, 2}, {{2, 1}, 2}, {{1, 0}, 0}, {{0, 1}, 0}};
  std::optional<Rational> best;
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      const auto& [p, u] = lines[a];
      const auto& [q, w] = lines[b];
      const Rational det = p[0] * q[1] - p[1] * q[0];
      if (det == 0) continue;
      const Vec x{(u * q[1] - p[1] * w) / det, (p[0] * w - u * q[0]) / det};
      if (!verify_primal_feasible(lp, x).pass) continue;
      const Rational v = x[0] + x[1];
      if (!best || v < *best) best = v;
    }
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(*best, Rational(4, 3));
  const auto s = solve(lp);
  EXPECT_EQ(s.value, ExtRational(*best));
  EXPECT_EQ(*s.primal, (Vec{Rational(2, 3), Rational(2, 3)}));
}

TEST(Solve, InfeasibleWithFarkasCertificate) {
  const auto lp = make(Direction::min, {0}, {{0}}, {1}, {RowSense::ge});
  const auto s = solve(lp);
  ASSERT_EQ(s.status, LPStatus::infeasible);
  EXPECT_TRUE(s.value.is_pos_inf());
  ASSERT_TRUE(s.farkas.has_value());
  EXPECT_TRUE(verify_farkas(lp, *s.farkas).pass);
}

TEST(Solve, InfeasibleEqualitySystem) {
  // x1 + x2 = 1 and x1 + x2 = 2 with free variables.
  const auto lp = make(Direction::max, {1, 0}, {{1, 1}, {1, 1}}, {1, 2}, {RowSense::eq, RowSense::eq},
                       {VarBound::free, VarBound::free});
  const auto s = solve(lp);
  ASSERT_EQ(s.status, LPStatus::infeasible);
  EXPECT_TRUE(s.value.is_neg_inf());
  EXPECT_TRUE(verify_farkas(lp, *s.farkas).pass);
}

TEST(Solve, UnboundedWithRay) {
  const auto lp = make(Direction::max, {1, 1}, {{1, -1}}, {1}, {RowSense::le});
  const auto s = solve(lp);
  ASSERT_EQ(s.status, LPStatus::unbounded);
  EXPECT_TRUE(s.value.is_pos_inf());
  EXPECT_TRUE(verify_ray(lp, *s.ray).pass);
  EXPECT_TRUE(verify_primal_feasible(lp, *s.primal).pass);
}

TEST(Solve, UnboundedThroughFreeVariable) {
  const auto lp = make(Direction::min, {1}, {{0}}, {0}, {RowSense::ge}, {VarBound::free});
  const auto s = solve(lp);
  ASSERT_EQ(s.status, LPStatus::unbounded);
  EXPECT_TRUE(verify_ray(lp, *s.ray).pass);
}

TEST(Solve, BealeCyclingExampleTerminates) {
  const auto lp = make(Direction::min, {Rational(-3, 4), 20, Rational(-1, 2), 6},
                       {{Rational(1, 4), -8, -1, 9}, {Rational(1, 2), -12, Rational(-1, 2), 3}, {0, 0, 1, 0}}, {0, 0, 1},
                       {RowSense::le, RowSense::le, RowSense::le});
  const auto s = solve(lp);
  ASSERT_EQ(s.status, LPStatus::optimal);
  EXPECT_EQ(s.value, ExtRational(Rational(-5, 4)));
}

TEST(Solve, RejectsMalformedInput) {
  auto lp = make(Direction::min, {1, 1}, {{1, 1}}, {1}, {RowSense::ge});
  lp.rhs.push_back(3);
  try {
    (void)solve(lp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "dimension-mismatch");
  }
}

TEST(Solve, IsDeterministic) {
  Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    const auto lp = random_instance(rng);
    const auto a = solve(lp), b = solve(lp);
    EXPECT_EQ(*a.primal, *b.primal);
    EXPECT_EQ(*a.dual, *b.dual);
    EXPECT_EQ(*a.basis, *b.basis);
  }
}

TEST(DualOf, SmallExample) {
  const auto lp = make(Direction::min, {1}, {{1}}, {1}, {RowSense::ge});
  const auto d = dual_of(lp);
  EXPECT_EQ(d.direction, Direction::max);
  EXPECT_EQ(d.objective, Vec{1});
  EXPECT_EQ(d.G(0, 0), Rational(1));
  EXPECT_EQ(d.rhs, Vec{1});
  EXPECT_EQ(d.sense, std::vector<RowSense>{RowSense::le});
  EXPECT_EQ(d.bounds, std::vector<VarBound>{VarBound::nonneg});
}

TEST(DualOf, TwiceGivesBackCanonicalForm) {
  const auto lp = make(Direction::min, {1, 2}, {{1, 3}, {2, -1}}, {4, 1}, {RowSense::ge, RowSense::ge});
  const auto dd = dual_of(dual_of(lp));
  EXPECT_EQ(dd.direction, lp.direction);
  EXPECT_EQ(dd.objective, lp.objective);
  EXPECT_EQ(dd.rhs, lp.rhs);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(dd.G(i, j), lp.G(i, j));
}

TEST(Duality, StrongDualityOnRandomInstances) {
  Rng rng(2024);
  for (int k = 0; k < 100; ++k) {
    const auto lp = random_instance(rng);
    const auto p = solve(lp);
    ASSERT_EQ(p.status, LPStatus::optimal) << k;
    const auto d = solve(dual_of(lp));
    ASSERT_EQ(d.status, LPStatus::optimal) << k;
    EXPECT_EQ(p.value, d.value) << k;
    // The dual LP's optimum maps back to optimal multipliers of lp.
    EXPECT_TRUE(verify_optimal(lp, *p.primal, multipliers_from_dual(lp, *d.primal)).pass) << k;
    // Double dual has the same value.
    EXPECT_EQ(solve(dual_of(dual_of(lp))).value, p.value) << k;
  }
}

TEST(Duality, WeakDualityOnFeasiblePairs) {
  Rng rng(99);
  for (int k = 0; k < 50; ++k) {
    const auto lp = random_instance(rng);
    const auto p = solve(lp);
    const auto d = solve(dual_of(lp));
    if (lp.direction == Direction::min)
      EXPECT_GE(p.value, d.value);
    else
      EXPECT_LE(p.value, d.value);
    const auto gap = duality_gap(p, d);
    ASSERT_TRUE(gap.has_value());
    EXPECT_EQ(*gap, ExtRational(Rational(0)));
  }
}

TEST(Duality, GapUndefinedForLikeInfinities) {
  LPSolution a, b;
  a.value = ExtRational::pos_inf();
  b.value = ExtRational::pos_inf();
  EXPECT_FALSE(duality_gap(a, b).has_value());
}

TEST(Subgradient, NormAtUnitVector) {
  using VecD = std::vector<double>;
  std::function<ExtDouble(const VecD&)> norm = [](const VecD& x) { return ExtDouble(std::hypot(x[0], x[1])); };
  std::vector<VecD> circle;
  for (int k = 0; k < 72; ++k) circle.push_back({std::cos(k * M_PI / 36), std::sin(k * M_PI / 36)});
  EXPECT_TRUE((subgradient_check<VecD, double>(norm, {1, 0}, {1, 0}, circle, 1e-12).pass));
  const auto r = subgradient_check<VecD, double>(norm, {1, 0}, {2, 0}, {{2, 0}}, 1e-12);
  ASSERT_FALSE(r.pass);
  EXPECT_EQ(r.witnesses[0].b_prime, (VecD{2, 0}));
}

TEST(Subgradient, DualOptimumIsSubgradientOfLPValue) {
  Rng rng(11);
  for (int k = 0; k < 30; ++k) {
    const auto lp = random_instance(rng);
    const auto s = solve(lp);
    // A max problem's value is concave in h; its negation is the convex value of the min form.
    const int sign = lp.direction == Direction::min ? 1 : -1;
    std::function<ExtRational(const Vec&)> v = [&](const Vec& h) {
      FiniteLP q = lp;
      q.rhs = h;
      const auto r = solve(q);
      return sign > 0 ? r.value : -r.value;
    };
    Vec ys = *s.dual;
    for (auto& y : ys) y *= sign;
    std::vector<Vec> pert;
    for (int t = 0; t < 20; ++t) {
      Vec h = lp.rhs;
      for (auto& x : h) x += rng.uniform_rational(-1, 1, 4);
      pert.push_back(h);
    }
    EXPECT_TRUE((subgradient_check<Vec, Rational>(v, lp.rhs, ys, pert, Rational(0)).pass)) << k;
  }
}
