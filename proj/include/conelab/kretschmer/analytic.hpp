#pragma once

#include <algorithm>
#include <variant>

#include "conelab/core/error.hpp"
#include "conelab/kretschmer/grid_fn.hpp"

// Closed-form optimal values of the continuum problem for indicator data.
namespace conelab::kretschmer {

/// b = indicator of [0, delta] union [gamma, 1], 0 <= delta <= gamma < 1.
struct TwoSided {
  Rational delta;
  Rational gamma;
};

/// b = indicator of [0, delta], 0 < delta < 1.
struct OneSided {
  Rational delta;
};

using IndicatorSpec = std::variant<TwoSided, OneSided>;

struct AnalyticValues {
  Rational valP;
  Rational valD;
  bool primal_attained = false;
  bool dual_attained = false;
};

/// Two-sided data: val(P) = alpha, val(D) = min{1, alpha}, both attained.
/// One-sided data: val(P) = val(D) = min{delta, alpha}; the primal optimum
/// exists only when alpha <= delta.
inline AnalyticValues analytic_values(const Rational& alpha, const IndicatorSpec& spec) {
  if (!(alpha > 0)) throw Error("out-of-range", "alpha must be > 0");
  if (const auto* two = std::get_if<TwoSided>(&spec)) {
    if (sgn(two->delta) < 0 || two->delta > two->gamma || !(two->gamma < 1))
      throw Error("out-of-range", "need 0 <= delta <= gamma < 1");
    return {alpha, std::min(Rational(1), alpha), true, true};
  }
  const auto& one = std::get<OneSided>(spec);
  if (!(one.delta > 0 && one.delta < 1)) throw Error("out-of-range", "need 0 < delta < 1");
  const Rational v = std::min(one.delta, alpha);
  return {v, v, alpha <= one.delta, true};
}

struct AlphaZeroValue {
  Rational value;
  bool attained = false;
};

/// With alpha = 0 the value function is the indicator of its domain, and every
/// grid function (essentially bounded above) lies in that domain.
inline AlphaZeroValue value_alpha_zero(const GridQ& b) {
  (void)b;
  return {Rational(0), true};
}

} // namespace conelab::kretschmer
