#include <gtest/gtest.h>

#include "conelab/convex/checks.hpp"
#include "conelab/socp/socp_gap.hpp"

using namespace conelab;
using namespace conelab::socp;

namespace {

const Box wide{Rational(-10), Rational(10), Rational(10)};

SocPoint random_point(Rng& rng) {
  return {rng.uniform_rational(-3, 3, 4), rng.uniform_rational(-3, 3, 4), rng.uniform_rational(-3, 3, 4)};
}

/// A member of Q built from (a, b) with a > 0: third coordinate b^2/(2a) plus slack.
SocPoint random_member(Rng& rng) {
  if (rng.uniform_int(0, 9) == 0) return {rng.uniform_rational(0, 3, 4), Rational(0), rng.uniform_rational(0, 3, 4)};
  const Rational a = rng.uniform_rational(1, 12, 4) / 4;
  const Rational b = rng.uniform_rational(-3, 3, 4);
  return {a, b, b * b / (2 * a) + rng.uniform_rational(0, 2, 4)};
}

Rational dot(const SocPoint& p, const SocPoint& q) { return p.y1 * q.y1 + p.y2 * q.y2 + p.y3 * q.y3; }

/// For u outside Q, a q in Q with <q, u> < 0. Uses q = (a, -sign(u2), 1/(2a)) on the
/// boundary of Q and scans a over multiples of 1/64 up to 64.
std::optional<SocPoint> separating_member(const SocPoint& u) {
  if (sgn(u.y1) < 0) return SocPoint{1, 0, 0};
  if (sgn(u.y3) < 0) return SocPoint{0, 0, 1};
  const Rational s = sgn(u.y2) > 0 ? -1 : 1;
  for (long j = 1; j <= 64 * 64; ++j) {
    const Rational a = make_rational(j, 64);
    const SocPoint q{a, s, 1 / (2 * a)};
    if (sgn(dot(q, u)) < 0) return q;
  }
  return std::nullopt;
}

} // namespace

TEST(Cone, Membership) {
  EXPECT_TRUE(q_member({1, 1, 1}));
  EXPECT_FALSE(q_member({1, 2, 1}));
  EXPECT_TRUE(q_member({0, 0, 0}));
  EXPECT_TRUE(q_member({1, 2, 2}));   // boundary
  EXPECT_FALSE(q_member({-1, 0, 1}));
}

TEST(Cone, SelfDual) {
  Rng rng(17);
  for (int k = 0; k < 10000; ++k) {
    const auto q = random_member(rng), u = random_member(rng);
    ASSERT_TRUE(q_member(q) && q_member(u));
    ASSERT_GE(sgn(dot(q, u)), 0);
  }
  int outside = 0;
  for (int k = 0; k < 2000; ++k) {
    const auto u = random_point(rng);
    if (q_member(u)) continue;
    ++outside;
    const auto q = separating_member(u);
    ASSERT_TRUE(q.has_value()) << k;
    EXPECT_TRUE(q_member(*q));
    EXPECT_LT(sgn(dot(*q, u)), 0);
  }
  EXPECT_GT(outside, 1000);
}

TEST(Value, ClosedForm) {
  EXPECT_EQ(value({5, 3, 0}), ExtRational(Rational(3)));
  EXPECT_EQ(value({5, 3, Rational(-1, 2)}), ExtRational(Rational(0)));
  EXPECT_TRUE(value({0, -1, 0}).is_pos_inf());
  EXPECT_EQ(value({0, 0, 0}), ExtRational(Rational(0)));
  EXPECT_TRUE(value({0, 0, 1}).is_pos_inf());
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_value({5, 3, 0}, wide, 401), ExtRational(Rational(3)));
  EXPECT_EQ(brute_value({0, 0, -1}, wide, 401), ExtRational(Rational(0)));
  EXPECT_TRUE(brute_value({0, 0, 1}, wide, 401).is_pos_inf());
  EXPECT_THROW(brute_value({0, 0, 1}, wide, 1), Error);
}

TEST(BruteForce, AgreesOnDomainSamples) {
  for (const auto& y : sample_domain(100, 7)) {
    const auto b = brute_value(y, wide, 401);
    ASSERT_TRUE(b.is_finite());
    EXPECT_LE(abs(Rational(b.value() - value(y).value())), Rational(1, 20));
  }
}

TEST(BruteForce, NeverBelowValue) {
  Rng rng(8);
  for (int k = 0; k < 200; ++k) {
    const auto y = random_point(rng);
    EXPECT_GE(brute_value(y, default_box(y), 41), value(y));
  }
}

TEST(BruteForce, DefaultBoxHoldsMinimizer) {
  // For y3 < 0 the minimizer is x2 = 0, x1 = y1 + y2^2 / (2|y3|).
  const SocPoint y{3, 4, Rational(-1, 2)};
  const auto box = default_box(y);
  EXPECT_GE(box.x1hi, Rational(3 + 16));
  EXPECT_EQ(brute_value(y, box, 401), ExtRational(Rational(0)));
}

TEST(Dual, Feasibility) {
  EXPECT_TRUE(dual_feasible({0, 0, 1}));
  EXPECT_FALSE(dual_feasible({0, 1, 1}));
  EXPECT_FALSE(dual_feasible({1, 0, 0}));
  EXPECT_TRUE(dual_feasible({0, 0, 0}));
}

TEST(Dual, BiconjugateMatchesGridSupremum) {
  // sup of s*y3 over s in {0, 1, ..., 10^6}: dual feasible points are (0, 0, s).
  for (long s : {0L, 1L, 1000L, 1000000L}) EXPECT_TRUE(dual_feasible({0, 0, s}));
  for (const SocPoint& y : {SocPoint{5, 3, 0}, SocPoint{0, 0, -2}, SocPoint{1, 1, Rational(1, 2)}}) {
    Rational best = 0;
    for (long s = 0; s <= 1000000; s += 1000) best = std::max(best, Rational(s * y.y3));
    if (sgn(y.y3) > 0) {
      EXPECT_GT(best, Rational(100000));
      EXPECT_TRUE(biconjugate_value(y).is_pos_inf());
    } else {
      EXPECT_EQ(biconjugate_value(y), ExtRational(best));
    }
  }
  EXPECT_LT(biconjugate_value({5, 3, 0}), value({5, 3, 0}));
}

TEST(Dual, BiconjugateBelowValueStrictExactlyOnBoundaryFace) {
  Rng rng(23);
  for (int k = 0; k < 2000; ++k) {
    auto y = random_point(rng);
    if (k % 3 == 0) y.y3 = 0;
    const auto v = value(y), vv = biconjugate_value(y);
    EXPECT_LE(vv, v);
    EXPECT_EQ(vv < v, sgn(y.y3) == 0 && sgn(y.y2) != 0) << k;
  }
}

TEST(Value, MonotoneInConeOrder) {
  Rng rng(29);
  for (int k = 0; k < 2000; ++k) {
    auto y = random_point(rng);
    if (k % 2 == 0) y.y3 = 0;
    auto q = random_member(rng);
    if (k % 4 == 0) q = {q.y1, 0, 0};
    const SocPoint y2{y.y1 + q.y1, y.y2 + q.y2, y.y3 + q.y3};
    EXPECT_LE(value(y), value(y2)) << k;
  }
}

TEST(Value, Sublinear) {
  const auto f = oracle();
  EXPECT_TRUE(convex::check_positive_homogeneity(f, 200, {Rational(1, 2), Rational(2), Rational(3)}, Rational(0), 3).pass);
  EXPECT_TRUE(convex::check_subadditivity(f, 200, Rational(0), 4).pass);
}

TEST(Value, NotLowerSemicontinuous) {
  const auto r = convex::liminf_along(oracle(), to_vec({5, 3, 0}), approach_from_below({5, 3, 0}), 20);
  EXPECT_EQ(r.estimate, ExtRational(Rational(0)));
  EXPECT_EQ(r.f_at_base, ExtRational(Rational(3)));
  EXPECT_TRUE(r.violated);
}
