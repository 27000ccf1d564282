#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "conelab/convex/oracle.hpp"
#include "conelab/core/error.hpp"
#include "conelab/core/extended_real.hpp"
#include "conelab/core/random.hpp"

namespace conelab::convex {

/// Comparison tolerance used when a caller does not supply one: 0 for exact
/// oracles, 1e-9 for floating ones.
template <class V>
V default_tolerance() {
  if constexpr (value_traits<V>::exact) {
    return V(0);
  } else {
    return V(1e-9);
  }
}

namespace detail {

template <class V>
bool within(const ExtendedReal<V>& a, const ExtendedReal<V>& b, const V& tol) {
  if (a.tag() != b.tag()) return false;
  if (!a.is_finite()) return true;
  V d = V(a.value() - b.value());
  return d <= tol && V(-d) <= tol;
}

/// a <= b + tol with infinities ordered by tag.
template <class V>
bool leq_tol(const ExtendedReal<V>& a, const ExtendedReal<V>& b, const V& tol) {
  if (b.is_pos_inf() || a.is_neg_inf()) return true;
  if (a.is_pos_inf() || b.is_neg_inf()) return false;
  return a.value() <= V(b.value() + tol);
}

} // namespace detail

template <class Point, class Value>
struct HomogeneityWitness {
  Point x;
  typename point_traits<Point>::scale_type t;
  ExtendedReal<Value> f_x;
  ExtendedReal<Value> f_tx;
};

template <class Point, class Value>
struct HomogeneityResult {
  bool pass = true;
  std::vector<HomogeneityWitness<Point, Value>> witnesses;
};

/// |f(t x) - t f(x)| <= tol on every sampled domain point and scale.
template <class Point, class Value>
HomogeneityResult<Point, Value> check_positive_homogeneity(
    const FnOracle<Point, Value>& f, std::size_t samples,
    const std::vector<typename point_traits<Point>::scale_type>& scales, const Value& tol, std::uint64_t seed) {
  using PT = point_traits<Point>;
  if (samples < 1) throw Error("precondition", "samples must be >= 1");
  if (!(tol >= Value(0))) throw Error("precondition", "tol must be >= 0");
  for (const auto& t : scales)
    if (!(t > 0)) throw Error("precondition", "scales must be positive");

  HomogeneityResult<Point, Value> out;
  for (const auto& x : f.sample_domain(samples, seed)) {
    const auto fx = f(x);
    for (const auto& t : scales) {
      const auto ftx = f(PT::scale(t, x));
      if (!detail::within(ftx, scale(t, fx), tol)) {
        out.pass = false;
        out.witnesses.push_back({x, t, fx, ftx});
      }
    }
  }
  return out;
}

template <class Point, class Value>
struct SubadditivityWitness {
  Point x;
  Point x2;
  ExtendedReal<Value> f_sum;     // f(x + x2)
  ExtendedReal<Value> sum_f;     // f(x) + f(x2)
};

template <class Point, class Value>
struct SubadditivityResult {
  bool pass = true;
  std::vector<SubadditivityWitness<Point, Value>> witnesses;
};

/// f(x + x') <= f(x) + f(x') + tol over sampled domain pairs.
template <class Point, class Value>
SubadditivityResult<Point, Value> check_subadditivity(const FnOracle<Point, Value>& f, std::size_t pairs,
                                                      const Value& tol, std::uint64_t seed) {
  using PT = point_traits<Point>;
  if (pairs < 1) throw Error("precondition", "pairs must be >= 1");
  const auto pts = f.sample_domain(2 * pairs, seed);
  SubadditivityResult<Point, Value> out;
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    const auto& a = pts[i];
    const auto& b = pts[i + 1];
    const auto lhs = f(PT::add(a, b));
    const auto rhs = f(a) + f(b);
    if (!detail::leq_tol(lhs, rhs, tol)) {
      out.pass = false;
      out.witnesses.push_back({a, b, lhs, rhs});
    }
  }
  return out;
}

template <class Value>
struct SemicontinuityEstimate {
  ExtendedReal<Value> estimate;   // liminf (or limsup) over the tail
  ExtendedReal<Value> f_at_base;
  bool violated = false;
};

namespace detail {

template <class Point, class Value, class Better>
ExtendedReal<Value> tail_extreme(const FnOracle<Point, Value>& f, const SequenceWitness<Point>& seq,
                                 std::size_t horizon, Better better) {
  if (horizon < 1) throw Error("precondition", "horizon must be >= 1");
  const std::size_t start = (horizon + 1) / 2;
  ExtendedReal<Value> best;
  for (std::size_t n = start; n <= horizon; ++n) {
    ExtendedReal<Value> v;
    try {
      v = f(seq(n));
    } catch (const std::exception& e) {
      throw Error("sequence-failed", "term n=" + std::to_string(n) + " of '" + seq.label + "': " + e.what());
    }
    if (n == start || better(v, best)) best = v;
  }
  return best;
}

template <class Value>
bool strictly_less(const ExtendedReal<Value>& a, const ExtendedReal<Value>& b, bool exact) {
  if (exact || !a.is_finite() || !b.is_finite()) return a < b;
  return value_traits<Value>::to_double(a.value()) < value_traits<Value>::to_double(b.value()) - 1e-9;
}

} // namespace detail

/// Truncated liminf of f along seq(n): the infimum over the tail
/// n = ceil(horizon/2) .. horizon. Violation means the estimate lies strictly
/// below f(base).
template <class Point, class Value>
SemicontinuityEstimate<Value> liminf_along(const FnOracle<Point, Value>& f, const Point& base,
                                           const SequenceWitness<Point>& seq, std::size_t horizon = 64) {
  SemicontinuityEstimate<Value> out;
  out.estimate = detail::tail_extreme(f, seq, horizon, [](const auto& a, const auto& b) { return a < b; });
  out.f_at_base = f(base);
  out.violated = detail::strictly_less(out.estimate, out.f_at_base, f.exact);
  return out;
}

/// Mirror of liminf_along: tail supremum, violated when it exceeds f(base).
template <class Point, class Value>
SemicontinuityEstimate<Value> limsup_along(const FnOracle<Point, Value>& f, const Point& base,
                                           const SequenceWitness<Point>& seq, std::size_t horizon = 64) {
  SemicontinuityEstimate<Value> out;
  out.estimate = detail::tail_extreme(f, seq, horizon, [](const auto& a, const auto& b) { return b < a; });
  out.f_at_base = f(base);
  out.violated = detail::strictly_less(out.f_at_base, out.estimate, f.exact);
  return out;
}

template <class Point>
struct MembershipResult {
  bool accepted = true;
  std::optional<Point> counterexample;
};

/// Sampling test of xstar ∈ ∂g(0) for sublinear g: <x, xstar> <= g(x) on every
/// sampled domain point (plus any caller-designed points). Rejection is exact;
/// acceptance only means the sample did not refute membership.
template <class Point, class Value>
MembershipResult<Point> subdiff_zero_membership(const FnOracle<Point, Value>& g, const Point& xstar,
                                                std::size_t samples, std::uint64_t seed,
                                                const std::vector<Point>& designed = {}) {
  using PT = point_traits<Point>;
  if (samples < 1) throw Error("precondition", "samples must be >= 1");
  auto pts = g.sample_domain(samples, seed);
  pts.insert(pts.end(), designed.begin(), designed.end());
  const Value tol = default_tolerance<Value>();
  MembershipResult<Point> out;
  for (const auto& x : pts) {
    const auto gx = g(x);
    if (gx.is_pos_inf()) continue;
    const ExtendedReal<Value> pairing(Value(PT::dot(x, xstar)));
    if (!detail::leq_tol(pairing, gx, tol)) {
      out.accepted = false;
      out.counterexample = x;
      return out;
    }
  }
  return out;
}

enum class TransferStatus { pass, fail, hypothesis_failed };

template <class Point, class Value>
struct LipschitzWitness {
  Point a;
  Point b;
  ExtendedReal<Value> g_a;
  ExtendedReal<Value> g_b;
};

template <class Point, class Value>
struct LipschitzTransferResult {
  TransferStatus status = TransferStatus::pass;
  std::vector<LipschitzWitness<Point, Value>> witnesses;
  std::size_t pairs_checked = 0;
};

namespace detail {

/// Points center + lambda*d with d drawn from the domain sampler and
/// ||lambda d|| < radius. When dom g is a convex cone containing center these
/// stay in the domain; points with infinite value are discarded.
template <class Point, class Value>
std::vector<std::pair<Point, ExtendedReal<Value>>> sample_ball(const FnOracle<Point, Value>& g, const Point& center,
                                                               const typename point_traits<Point>::scale_type& radius,
                                                               std::size_t count, std::uint64_t seed) {
  using PT = point_traits<Point>;
  using S = typename PT::scale_type;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<Point, ExtendedReal<Value>>> out;
  for (const auto& d : g.sample_domain(count, seed)) {
    S u = S(1 + rng.uniform_int(0, 998)) / S(1000);
    S lambda = S(radius * u) / S(1 + PT::norm_sq(d));
    Point p = PT::add(center, PT::scale(lambda, d));
    auto v = g(p);
    if (v.is_finite()) out.emplace_back(std::move(p), std::move(v));
  }
  return out;
}

template <class Point, class Value>
bool lipschitz_ok(const Point& a, const Point& b, const ExtendedReal<Value>& ga, const ExtendedReal<Value>& gb,
                  const typename point_traits<Point>::scale_type& L) {
  using PT = point_traits<Point>;
  using S = typename PT::scale_type;
  const S dist_sq = PT::norm_sq(PT::add(a, PT::scale(S(-1), b)));
  if constexpr (std::is_same_v<Value, Rational> && std::is_same_v<S, Rational>) {
    const Rational diff = ga.value() - gb.value();
    return Rational(diff * diff) <= Rational(L * L * dist_sq);
  } else {
    const double diff = std::abs(value_traits<Value>::to_double(ga.value()) - value_traits<Value>::to_double(gb.value()));
    return diff <= value_traits<S>::to_double(L) * std::sqrt(value_traits<S>::to_double(dist_sq)) + 1e-9;
  }
}

} // namespace detail

/// Local-to-scaled Lipschitz transfer for sublinear g: if the L-Lipschitz
/// estimate holds on sampled pairs of B(x, delta) ∩ dom g, test it on sampled
/// pairs of B(gamma x, gamma delta) ∩ dom g.
template <class Point, class Value>
LipschitzTransferResult<Point, Value> check_lipschitz_transfer(
    const FnOracle<Point, Value>& g, const Point& x, const typename point_traits<Point>::scale_type& delta,
    const typename point_traits<Point>::scale_type& L, const typename point_traits<Point>::scale_type& gamma,
    std::size_t pairs, std::uint64_t seed) {
  using PT = point_traits<Point>;
  if (!(delta > 0) || !(L > 0) || !(gamma > 0)) throw Error("precondition", "delta, L and gamma must be positive");
  if (pairs < 1) throw Error("precondition", "pairs must be >= 1");

  LipschitzTransferResult<Point, Value> out;
  auto run = [&](const Point& center, const auto& radius, std::uint64_t s) {
    const auto pts = detail::sample_ball(g, center, radius, 2 * pairs, s);
    std::vector<LipschitzWitness<Point, Value>> bad;
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
      ++out.pairs_checked;
      const auto& [a, ga] = pts[i];
      const auto& [b, gb] = pts[i + 1];
      if (!detail::lipschitz_ok(a, b, ga, gb, L)) bad.push_back({a, b, ga, gb});
    }
    return bad;
  };

  auto hyp = run(x, delta, seed);
  if (!hyp.empty()) {
    out.status = TransferStatus::hypothesis_failed;
    out.witnesses = std::move(hyp);
    return out;
  }
  auto scaled = run(PT::scale(gamma, x), gamma * delta, seed + 1);
  if (!scaled.empty()) {
    out.status = TransferStatus::fail;
    out.witnesses = std::move(scaled);
  }
  return out;
}

} // namespace conelab::convex
