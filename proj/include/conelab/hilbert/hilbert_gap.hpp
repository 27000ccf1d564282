#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "conelab/convex/oracle.hpp"
#include "conelab/core/error.hpp"
#include "conelab/core/radical_sum.hpp"
#include "conelab/core/random.hpp"
#include "conelab/core/sparse_seq.hpp"
#include "conelab/lp/finite_lp.hpp"

// Truncation to e_1..e_2N of the Hilbert-space program
//   min <x, c*>  s.t.  x in cone{z_n},  Pr_L x = y,
// with z_n = eta_n e_{2n-1} - mu_n e_{2n}, c* = sum eta_n e_{2n} and L the
// closed span of the odd basis vectors. Points of L are stored by their odd
// coefficients gamma_n (an "odd vector"), so y = sum gamma_n e_{2n-1}.
namespace conelab::hilbert {

using OddVector = SparseSeq;

class HilbertModel {
public:
  /// eta_n = 2^-n.
  static HilbertModel dyadic(std::size_t trunc) {
    return HilbertModel(trunc, [](std::size_t n) { return pow2(-static_cast<int>(n)); });
  }

  HilbertModel(std::size_t trunc, std::function<Rational(std::size_t)> eta) : trunc_(trunc), eta_(std::move(eta)) {
    if (trunc_ < 1) throw Error("precondition", "truncation must be >= 1");
  }

  std::size_t trunc() const noexcept { return trunc_; }

  Rational eta(std::size_t n) const {
    check_index(n);
    Rational e = eta_(n);
    if (!(e > 0 && e < 1)) throw Error("out-of-range", "eta_" + std::to_string(n) + " must lie in (0, 1)");
    return e;
  }

  /// mu_n^2 = 1 - eta_n^2, exact.
  Rational mu_sq(std::size_t n) const {
    const Rational e = eta(n);
    return 1 - e * e;
  }

  RadicalSum mu(std::size_t n) const { return RadicalSum::sqrt(mu_sq(n)); }
  double mu_double(std::size_t n) const { return std::sqrt(mu_sq(n).get_d()); }

  /// Rational lower approximation of mu_n with error below 2^-bits.
  Rational mu_rational(std::size_t n, int bits = 96) const {
    const Rational q = mu_sq(n);
    mpz_class scaled = q.get_num() * q.get_den();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(2 * bits));
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return Rational(root) / (Rational(q.get_den()) * pow2(bits));
  }

  void check_support(const OddVector& y) const {
    if (y.max_index() > trunc_)
      throw Error("out-of-range", "support beyond truncation " + std::to_string(trunc_) + ": " + y.describe());
  }

private:
  void check_index(std::size_t n) const {
    if (n < 1 || n > trunc_) throw Error("out-of-range", "index " + std::to_string(n) + " outside 1.." + std::to_string(trunc_));
  }

  std::size_t trunc_;
  std::function<Rational(std::size_t)> eta_;
};

inline bool in_domain(const OddVector& y) {
  for (const auto& [n, g] : y.entries())
    if (sgn(g) < 0) return false;
  return true;
}

/// -sum mu_n gamma_n when every gamma_n >= 0, else +inf.
inline ExtendedReal<RadicalSum> value(const HilbertModel& m, const OddVector& y) {
  m.check_support(y);
  if (!in_domain(y)) return ExtendedReal<RadicalSum>::pos_inf();
  RadicalSum v;
  for (const auto& [n, g] : y.entries()) v -= m.mu(n) * g;
  return v;
}

/// The unique lambda with Pr_L(sum lambda_n z_n) = y: lambda_n = gamma_n / eta_n.
inline SparseSeq recover_primal(const HilbertModel& m, const OddVector& y) {
  m.check_support(y);
  if (!in_domain(y)) throw Error("not-in-domain", "some gamma_n < 0 in " + y.describe());
  SparseSeq lambda;
  for (const auto& [n, g] : y.entries()) lambda.set(n, g / m.eta(n));
  return lambda;
}

/// Pr_L of sum lambda_n z_n, as odd coefficients: gamma_n = eta_n lambda_n.
inline OddVector apply_A(const HilbertModel& m, const SparseSeq& lambda) {
  OddVector y;
  for (const auto& [n, l] : lambda.entries()) y.set(n, m.eta(n) * l);
  return y;
}

/// <c*, sum lambda_n z_n> = -sum eta_n mu_n lambda_n.
inline RadicalSum objective(const HilbertModel& m, const SparseSeq& lambda) {
  RadicalSum v;
  for (const auto& [n, l] : lambda.entries()) v -= m.mu(n) * (m.eta(n) * l);
  return v;
}

/// <z_n, z_k> computed from coordinates: the supports are disjoint unless n = k.
inline Rational z_inner(const HilbertModel& m, std::size_t n, std::size_t k) {
  if (n != k) return 0;
  const Rational e = m.eta(n);
  return e * e + m.mu_sq(n);
}

/// Squared norm bound sum_{k<=N} mu_k^2: any dual-feasible point has odd
/// coefficients lambda_k <= -mu_k for every k <= N.
inline Rational dual_norm_sq_lower_bound(const HilbertModel& m) {
  Rational s = 0;
  for (std::size_t k = 1; k <= m.trunc(); ++k) s += m.mu_sq(k);
  return s;
}

inline double dual_norm_lower_bound(const HilbertModel& m) { return std::sqrt(dual_norm_sq_lower_bound(m).get_d()); }

struct TruncatedDual {
  std::vector<RadicalSum> lambda;  // lambda[k-1] is the coefficient of e_{2k-1}
  RadicalSum dual_value;
  bool strong_duality = false;
};

/// The dual point with odd coefficients lambda_k = -mu_k for all k <= N, the
/// largest value allowed by dual feasibility in every coordinate.
inline TruncatedDual truncated_dual_optimum(const HilbertModel& m, const OddVector& y) {
  m.check_support(y);
  if (!in_domain(y)) throw Error("not-in-domain", "some gamma_n < 0 in " + y.describe());
  TruncatedDual out;
  for (std::size_t k = 1; k <= m.trunc(); ++k) out.lambda.push_back(-m.mu(k));
  for (const auto& [n, g] : y.entries()) out.dual_value += out.lambda[n - 1] * g;
  out.strong_duality = value(m, y) == ExtendedReal<RadicalSum>(out.dual_value);
  return out;
}

struct WitnessTerm {
  std::size_t m = 0;
  Rational harmonic;               // H_m
  std::vector<double> gammas;      // odd coefficients of b_m, index n-1
  double value = 0;                // v(b_m)
  double value_bound = 0;          // v(b) - mu_1 sqrt(H_m)
  double distance = 0;             // ||b_m - b||
  double distance_bound = 0;       // H_m^{-1/2} sqrt(sum_{n<=m} n^-2)
};

/// b_m = b + H_m^{-1/2} sum_{n<=m} (1/n) e_{2n-1} for m = 0..mmax: b_m -> b
/// while v(b_m) <= v(b) - mu_1 sqrt(H_m) -> -inf.
inline std::vector<WitnessTerm> lsc_failure_witness(const HilbertModel& model, const OddVector& b, std::size_t mmax) {
  model.check_support(b);
  if (!in_domain(b)) throw Error("not-in-domain", "base point " + b.describe());
  if (mmax > model.trunc()) throw Error("precondition", "mmax exceeds the truncation");
  const double vb = value(model, b).value().to_double();
  std::vector<WitnessTerm> out;
  Rational h = 0, inv_sq = 0;
  for (std::size_t m = 0; m <= mmax; ++m) {
    WitnessTerm w;
    w.m = m;
    if (m > 0) {
      const Rational mm(static_cast<unsigned long>(m));
      h += 1 / mm;
      inv_sq += 1 / (mm * mm);
    }
    w.harmonic = h;
    const double t = m == 0 ? 0.0 : 1.0 / std::sqrt(h.get_d());
    w.gammas.assign(model.trunc(), 0.0);
    double v = 0, dist_sq = 0;
    for (std::size_t n = 1; n <= model.trunc(); ++n) {
      const double bump = n <= m ? t / static_cast<double>(n) : 0.0;
      w.gammas[n - 1] = b.get(n).get_d() + bump;
      v -= model.mu_double(n) * w.gammas[n - 1];
      dist_sq += bump * bump;
    }
    w.value = v;
    w.value_bound = vb - model.mu_double(1) * std::sqrt(h.get_d());
    w.distance = std::sqrt(dist_sq);
    w.distance_bound = t * std::sqrt(inv_sq.get_d());
    out.push_back(std::move(w));
  }
  return out;
}

/// The truncated program as a finite LP in lambda >= 0: rows eta_n lambda_n = gamma_n
/// for n <= N, cost -eta_n mu_n lambda_n with mu_n rounded down to 2^-bits.
inline lp::FiniteLP truncated_lp(const HilbertModel& m, const OddVector& y, int bits = 96) {
  m.check_support(y);
  const std::size_t N = m.trunc();
  lp::FiniteLP p;
  p.direction = lp::Direction::min;
  p.objective.resize(N);
  p.G = lp::Matrix(N, N);
  p.rhs.resize(N);
  p.sense.assign(N, lp::RowSense::eq);
  p.bounds.assign(N, lp::VarBound::nonneg);
  for (std::size_t n = 1; n <= N; ++n) {
    p.objective[n - 1] = -m.eta(n) * m.mu_rational(n, bits);
    p.G(n - 1, n - 1) = m.eta(n);
    p.rhs[n - 1] = y.get(n);
  }
  return p;
}

/// Random points of dom v: 1..4 nonnegative quarter-integer coefficients.
inline std::vector<OddVector> sample_domain(const HilbertModel& m, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<OddVector> out;
  out.reserve(count);
  const long top = static_cast<long>(m.trunc());
  for (std::size_t i = 0; i < count; ++i) {
    OddVector y;
    const long terms = rng.uniform_int(1, std::min(4L, top));
    for (long t = 0; t < terms; ++t)
      y.set(static_cast<std::size_t>(rng.uniform_int(1, top)), rng.uniform_rational(0, 4, 4));
    out.push_back(std::move(y));
  }
  return out;
}

inline convex::FnOracle<OddVector, RadicalSum> oracle(const HilbertModel& m) {
  convex::FnOracle<OddVector, RadicalSum> f;
  f.dim = "sequence";
  f.eval = [m](const OddVector& y) { return value(m, y); };
  f.sample_domain = [m](std::size_t count, std::uint64_t seed) { return sample_domain(m, count, seed); };
  return f;
}

} // namespace conelab::hilbert
