#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "conelab/convex/oracle.hpp"
#include "conelab/core/extended_real.hpp"
#include "conelab/core/random.hpp"
#include "conelab/core/rational.hpp"

// A two-variable conic program over the rotated second-order cone
//   Q = {(y1, y2, y3) : y1, y3 >= 0, y2^2 <= 2 y1 y3}
// with X = R^2, A(x1, x2) = (x1, x2, 0), cost x2 and x in R x R+.
// Its value function v(y) = inf{x2 : A x - y in Q} is sublinear but not lsc.
namespace conelab::socp {

struct SocPoint {
  Rational y1, y2, y3;

  friend bool operator==(const SocPoint& a, const SocPoint& b) { return a.y1 == b.y1 && a.y2 == b.y2 && a.y3 == b.y3; }
};

inline std::vector<Rational> to_vec(const SocPoint& p) { return {p.y1, p.y2, p.y3}; }
inline SocPoint from_vec(const std::vector<Rational>& v) {
  if (v.size() != 3) throw Error("dimension-mismatch", "a cone point has three coordinates");
  return {v[0], v[1], v[2]};
}

inline bool q_member(const SocPoint& y) {
  return sgn(y.y1) >= 0 && sgn(y.y3) >= 0 && y.y2 * y.y2 <= 2 * y.y1 * y.y3;
}

/// Closed form: y2 on {y3 = 0, y2 >= 0}, 0 on {y3 < 0}, +inf elsewhere.
inline ExtRational value(const SocPoint& y) {
  if (sgn(y.y3) < 0) return Rational(0);
  if (sgn(y.y3) == 0 && sgn(y.y2) >= 0) return y.y2;
  return ExtRational::pos_inf();
}

struct Box {
  Rational x1lo, x1hi, x2hi;
};

/// A box containing the minimizers: x1 = y1 when y3 = 0 and
/// x1 = y1 + y2^2 / (2|y3|) when y3 < 0. The l1 norm stands in for the
/// Euclidean one to keep the bounds rational.
inline Box default_box(const SocPoint& y) {
  const Rational l1 = abs(y.y1) + abs(y.y2) + abs(y.y3);
  Rational r = 2 * (1 + abs(y.y1) + l1);
  if (sgn(y.y3) < 0) r += y.y2 * y.y2 / (2 * abs(y.y3));
  return {-r, r, 2 * (1 + abs(y.y2))};
}

/// Smallest x2 over the grid on box with A x - y in Q; +inf if no grid point is feasible.
inline ExtRational brute_value(const SocPoint& y, const Box& box, std::size_t grid) {
  if (grid < 2) throw Error("precondition", "grid must be >= 2");
  const Rational steps(static_cast<unsigned long>(grid - 1));
  const Rational dx1 = (box.x1hi - box.x1lo) / steps;
  const Rational dx2 = box.x2hi / steps;
  for (std::size_t b = 0; b < grid; ++b) {
    const Rational x2 = dx2 * Rational(static_cast<unsigned long>(b));
    for (std::size_t a = 0; a < grid; ++a) {
      const Rational x1 = box.x1hi - dx1 * Rational(static_cast<unsigned long>(a));
      if (q_member({x1 - y.y1, x2 - y.y2, -y.y3})) return x2;
    }
  }
  return ExtRational::pos_inf();
}

/// ystar in Q+ (= Q, the cone is self-dual) with c* - A* ystar in P+ = {0} x R+.
inline bool dual_feasible(const SocPoint& ystar) {
  const Rational r1 = -ystar.y1;     // (0, 1) - (y1, y2), first coordinate
  const Rational r2 = 1 - ystar.y2;
  return q_member(ystar) && sgn(r1) == 0 && sgn(r2) >= 0;
}

/// sup{<y, ystar> : ystar dual feasible} = sup over s >= 0 of s * y3.
inline ExtRational biconjugate_value(const SocPoint& y) {
  return sgn(y.y3) <= 0 ? ExtRational(Rational(0)) : ExtRational::pos_inf();
}

/// Points of dom v: half on {y3 = 0, y2 >= 0} with y2 a multiple of 1/40,
/// half with y3 in [-2, -1].
inline std::vector<SocPoint> sample_domain(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SocPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 2 == 0)
      out.push_back({rng.uniform_rational(-5, 5, 8), rng.uniform_rational(0, 5, 40), Rational(0)});
    else
      out.push_back({rng.uniform_rational(-5, 5, 8), rng.uniform_rational(-2, 2, 8), rng.uniform_rational(-2, -1, 8)});
  }
  return out;
}

inline convex::FnOracle<std::vector<Rational>, Rational> oracle() {
  convex::FnOracle<std::vector<Rational>, Rational> f;
  f.dim = "3";
  f.eval = [](const std::vector<Rational>& y) { return value(from_vec(y)); };
  f.sample_domain = [](std::size_t count, std::uint64_t seed) {
    std::vector<std::vector<Rational>> pts;
    for (const auto& p : sample_domain(count, seed)) pts.push_back(to_vec(p));
    return pts;
  };
  return f;
}

/// zeta_n = (y1, y2, y3 - 1/n): approaches y from {y3 < 0}, where v = 0.
inline convex::SequenceWitness<std::vector<Rational>> approach_from_below(const SocPoint& y) {
  return {[y](std::size_t n) {
            return to_vec({y.y1, y.y2, y.y3 - Rational(1) / Rational(static_cast<unsigned long>(n))});
          },
          "(y1, y2, y3 - 1/n)"};
}

} // namespace conelab::socp
