#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "conelab/convex/checks.hpp"
#include "conelab/kretschmer/witnesses.hpp"
#include "conelab/pathology/pathology.hpp"
#include "conelab/socp/socp_gap.hpp"

using namespace conelab;
using namespace conelab::convex;
using VecD = std::vector<double>;

namespace {

FnOracle<VecD, double> euclid(std::size_t dim) {
  FnOracle<VecD, double> f;
  f.dim = std::to_string(dim);
  f.eval = [](const VecD& x) {
    double s = 0;
    for (double v : x) s += v * v;
    return ExtDouble(std::sqrt(s));
  };
  f.sample_domain = [dim](std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<VecD> pts(count, VecD(dim));
    for (auto& p : pts)
      for (auto& v : p) v = rng.uniform(-3, 3);
    return pts;
  };
  return f;
}

FnOracle<VecD, double> scalar(std::function<double(double)> g, double lo, double hi) {
  FnOracle<VecD, double> f;
  f.dim = "1";
  f.eval = [g](const VecD& x) { return ExtDouble(g(x[0])); };
  f.sample_domain = [lo, hi](std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<VecD> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back({rng.uniform(lo, hi)});
    return pts;
  };
  return f;
}

} // namespace

TEST(Homogeneity, NormPasses) {
  EXPECT_TRUE(check_positive_homogeneity(euclid(2), 50, VecD{0.5, 2.0}, 1e-9, 1).pass);
}

TEST(Homogeneity, SquareFailsWithWitness) {
  auto f = scalar([](double x) { return x * x; }, 0, 1);
  f.sample_domain = [](std::size_t, std::uint64_t) { return std::vector<VecD>{{1.0}}; };
  const auto r = check_positive_homogeneity(f, 1, VecD{2.0}, 1e-9, 1);
  ASSERT_FALSE(r.pass);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].f_x, ExtDouble(1.0));
  EXPECT_EQ(r.witnesses[0].f_tx, ExtDouble(4.0));
}

TEST(Homogeneity, ConeValueFunctionIsExactlyHomogeneous) {
  const auto r = check_positive_homogeneity(socp::oracle(), 50, {Rational(1, 2), Rational(2), Rational(3)}, Rational(0), 5);
  EXPECT_TRUE(r.pass);
}

TEST(Homogeneity, RejectsBadArguments) {
  EXPECT_THROW(check_positive_homogeneity(euclid(2), 0, VecD{2.0}, 0.0, 1), Error);
  EXPECT_THROW(check_positive_homogeneity(euclid(2), 5, VecD{-1.0}, 0.0, 1), Error);
  EXPECT_THROW(check_positive_homogeneity(euclid(2), 5, VecD{1.0}, -1.0, 1), Error);
}

TEST(Subadditivity, NormPasses) { EXPECT_TRUE(check_subadditivity(euclid(3), 100, 1e-9, 2).pass); }

TEST(Subadditivity, NegatedAbsoluteValueOnChosenPairs) {
  auto f = scalar([](double x) { return -std::abs(x); }, -1, 1);
  f.sample_domain = [](std::size_t, std::uint64_t) { return std::vector<VecD>{{1.0}, {-1.0}, {1.0}, {1.0}}; };
  // f(0) = 0 > -2 fails on the first pair; f(2) = -2 <= -2 holds on the second.
  const auto r = check_subadditivity(f, 2, 1e-9, 1);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].f_sum, ExtDouble(0.0));
  EXPECT_EQ(r.witnesses[0].sum_f, ExtDouble(-2.0));
}

TEST(Subadditivity, DiscreteKretschmerValue) {
  EXPECT_TRUE(check_subadditivity(kretschmer::oracle(2, 8), 30, Rational(0), 3).pass);
}

TEST(Liminf, ConeValueJumpsAlongApproachFromBelow) {
  const socp::SocPoint y{5, 3, 0};
  const auto r = liminf_along(socp::oracle(), socp::to_vec(y), socp::approach_from_below(y), 20);
  EXPECT_EQ(r.estimate, ExtRational(Rational(0)));
  EXPECT_EQ(r.f_at_base, ExtRational(Rational(3)));
  EXPECT_TRUE(r.violated);
}

TEST(Liminf, NormIsContinuous) {
  SequenceWitness<VecD> seq{[](std::size_t n) { return VecD{1.0 / static_cast<double>(n), 0.0}; }, "(1/n, 0)"};
  const auto r = liminf_along(euclid(2), VecD{0, 0}, seq, 10);
  EXPECT_FALSE(r.violated);
  EXPECT_GE(r.estimate.value(), 0.0);
  EXPECT_EQ(r.f_at_base, ExtDouble(0.0));
}

TEST(Liminf, PathologyLowerJump) {
  using namespace pathology;
  const SparseSeq x = -SparseSeq::basis(1);
  const auto r = liminf_along(oracle(PathologyKind::g3), x, lsc_witness(x), 20);
  EXPECT_EQ(r.estimate, ExtRational(Rational(-2)));
  EXPECT_EQ(r.f_at_base, ExtRational(Rational(-1)));
  EXPECT_TRUE(r.violated);
}

TEST(Liminf, MonotoneInHorizonOnNonincreasingSequences) {
  // f(seq(n)) = 1/n + 1 is decreasing, so the tail infimum can only drop.
  SequenceWitness<VecD> seq{[](std::size_t n) { return VecD{1.0 + 1.0 / static_cast<double>(n)}; }, "1 + 1/n"};
  auto f = scalar([](double x) { return x; }, 0, 1);
  double prev = HUGE_VAL;
  for (std::size_t h = 1; h <= 80; ++h) {
    const double est = liminf_along(f, VecD{1.0}, seq, h).estimate.value();
    EXPECT_LE(est, prev);
    prev = est;
  }
}

TEST(Liminf, ReportsFailingTerm) {
  SequenceWitness<VecD> seq{[](std::size_t n) -> VecD {
                              if (n == 7) throw std::runtime_error("boom");
                              return VecD{0.0, 0.0};
                            },
                            "bad"};
  try {
    (void)liminf_along(euclid(2), VecD{0, 0}, seq, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "sequence-failed");
    EXPECT_NE(std::string(e.what()).find("n=7"), std::string::npos);
  }
  EXPECT_THROW((void)liminf_along(euclid(2), VecD{0, 0}, seq, 0), Error);
}

TEST(Oracle, AttachesPointToFailures) {
  FnOracle<VecD, double> f = euclid(2);
  f.eval = [](const VecD&) -> ExtDouble { throw std::runtime_error("bad eval"); };
  try {
    (void)f(VecD{1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "oracle-failed");
    EXPECT_NE(std::string(e.what()).find("(1, 2)"), std::string::npos);
  }
}

TEST(SubdiffZero, UnitVectorIsASubgradientOfTheNorm) {
  // Independent check first: <x, (0.6, 0.8)> <= |x| on a 1-degree grid of unit vectors.
  for (int deg = 0; deg < 360; ++deg) {
    const double t = deg * std::numbers::pi / 180.0;
    EXPECT_LE(0.6 * std::cos(t) + 0.8 * std::sin(t), 1.0 + 1e-12);
  }
  EXPECT_TRUE(subdiff_zero_membership(euclid(2), VecD{0.6, 0.8}, 500, 9).accepted);
}

TEST(SubdiffZero, TooLongVectorIsRejectedOnDesignedPoint) {
  const auto r = subdiff_zero_membership(euclid(2), VecD{1, 1}, 1, 9, {VecD{1, 1}});
  ASSERT_FALSE(r.accepted);
  ASSERT_TRUE(r.counterexample.has_value());
}

TEST(SubdiffZero, SampledLowerSemicontinuityAtZero) {
  // Norm: sublinear, accepted subgradient, so no sampled sequence of domain
  // points converging to 0 certifies a liminf below 0.
  const auto f = euclid(2);
  ASSERT_TRUE(subdiff_zero_membership(f, VecD{0, 0}, 100, 1).accepted);
  const auto pts = f.sample_domain(10, 4);
  for (const auto& p : pts) {
    SequenceWitness<VecD> seq{[p](std::size_t n) { return point_traits<VecD>::scale(1.0 / static_cast<double>(n), p); }, "p/n"};
    const auto r = liminf_along(f, VecD{0, 0}, seq, 64);
    EXPECT_FALSE(r.violated);
    EXPECT_GE(r.estimate.value(), 0.0);
  }
}

TEST(LipschitzTransfer, GloballyLipschitzFunctionPasses) {
  const auto g = scalar([](double x) { return std::max(0.0, 2 * x); }, -1, 1);
  const auto r = check_lipschitz_transfer(g, VecD{1.0}, 0.5, 2.0, 10.0, 50, 1);
  EXPECT_EQ(r.status, TransferStatus::pass);
  EXPECT_GT(r.pairs_checked, 50u);
}

TEST(LipschitzTransfer, SquareFailsAfterScaling) {
  const auto g = scalar([](double x) { return x * x; }, -1, 1);
  const auto r = check_lipschitz_transfer(g, VecD{1.0}, 0.1, 2.2, 100.0, 50, 1);
  ASSERT_EQ(r.status, TransferStatus::fail);
  ASSERT_FALSE(r.witnesses.empty());
  const auto& w = r.witnesses.front();
  const double slope = std::abs(w.g_a.value() - w.g_b.value()) / std::abs(w.a[0] - w.b[0]);
  EXPECT_GT(slope, 2.2);
}

TEST(LipschitzTransfer, HypothesisFailureIsReported) {
  const auto g = scalar([](double x) { return 10 * x; }, -1, 1);
  const auto r = check_lipschitz_transfer(g, VecD{1.0}, 0.5, 2.0, 10.0, 10, 1);
  EXPECT_EQ(r.status, TransferStatus::hypothesis_failed);
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(LipschitzTransfer, DiscreteKretschmerValue) {
  // |v(b) - v(b')| <= alpha |b - b'|_inf <= alpha sqrt(n) |b - b'|_L2, and 2 sqrt(8) < 6.
  const auto f = kretschmer::oracle(2, 8);
  const kretschmer::GridQ x(8, Rational(1));
  const auto r = check_lipschitz_transfer(f, x, Rational(1, 2), Rational(6), Rational(3), 20, 11);
  EXPECT_EQ(r.status, TransferStatus::pass);
}
