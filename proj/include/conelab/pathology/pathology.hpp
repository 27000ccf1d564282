#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "conelab/convex/oracle.hpp"
#include "conelab/core/error.hpp"
#include "conelab/core/extended_real.hpp"
#include "conelab/core/random.hpp"
#include "conelab/core/sparse_seq.hpp"

// Sublinear functions on c00 (finitely supported sequences, l2 norm) built
// from the unbounded linear functional phi(e_n) = n.
namespace conelab::pathology {

enum class PathologyKind { g1, g2, g3 };

inline std::string to_string(PathologyKind k) {
  switch (k) {
  case PathologyKind::g1: return "g1";
  case PathologyKind::g2: return "g2";
  default: return "g3";
  }
}

/// phi(x) = sum of n * x_n. Linear, and phi(e_n) / ||e_n|| = n is unbounded.
inline Rational phi(const SparseSeq& x) {
  Rational s = 0;
  for (const auto& [n, v] : x.entries()) s += Rational(static_cast<unsigned long>(n)) * v;
  return s;
}

/// g1 = max{0, phi}; g2 = indicator of [phi <= 0]; g3 = phi on [phi <= 0], +inf elsewhere.
inline ExtRational eval_pathology(PathologyKind kind, const SparseSeq& x) {
  const Rational p = phi(x);
  switch (kind) {
  case PathologyKind::g1: return p > 0 ? p : Rational(0);
  case PathologyKind::g2: return p > 0 ? ExtRational::pos_inf() : ExtRational(Rational(0));
  default: return p > 0 ? ExtRational::pos_inf() : ExtRational(p);
  }
}

/// n -> x - (phi(x)/n) e_n. Each term has phi = 0 and lies at distance
/// |phi(x)|/n from x, so g3 stays at 0 while g3(x) = phi(x) < 0.
inline convex::SequenceWitness<SparseSeq> usc_witness(const SparseSeq& x) {
  const Rational p = phi(x);
  if (p >= 0) throw Error("requires-negative-phi", "phi(x) = " + format_rational(p));
  return {[x, p](std::size_t n) {
            const Rational nn(static_cast<unsigned long>(n));
            return x - SparseSeq::basis(n, p / nn);
          },
          "x - (phi(x)/n) e_n"};
}

/// n -> x - (1/n) e_n. Each term has phi = phi(x) - 1.
inline convex::SequenceWitness<SparseSeq> lsc_witness(const SparseSeq& x) {
  const Rational p = phi(x);
  if (p > 0) throw Error("requires-nonpositive-phi", "phi(x) = " + format_rational(p));
  return {[x](std::size_t n) {
            return x - SparseSeq::basis(n, Rational(1) / Rational(static_cast<unsigned long>(n)));
          },
          "x - (1/n) e_n"};
}

/// Random finitely supported points: 1..3 entries over indices 1..12 with
/// quarter-integer coefficients. For g2 and g3 the point is flipped into [phi <= 0].
inline std::vector<SparseSeq> sample_points(PathologyKind kind, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SparseSeq> out;
  out.reserve(count);
  while (out.size() < count) {
    SparseSeq x;
    const long terms = rng.uniform_int(1, 3);
    for (long t = 0; t < terms; ++t)
      x.set(static_cast<std::size_t>(rng.uniform_int(1, 12)), rng.uniform_rational(-5, 5, 4));
    if (kind != PathologyKind::g1 && phi(x) > 0) x = -x;
    out.push_back(std::move(x));
  }
  return out;
}

inline convex::FnOracle<SparseSeq, Rational> oracle(PathologyKind kind) {
  convex::FnOracle<SparseSeq, Rational> f;
  f.dim = "sequence";
  f.eval = [kind](const SparseSeq& x) { return eval_pathology(kind, x); };
  f.sample_domain = [kind](std::size_t count, std::uint64_t seed) { return sample_points(kind, count, seed); };
  return f;
}

/// Points of dom g3 that refute xstar in the subdifferential of g3 at 0: for
/// m beyond the support of xstar, <-e_m, xstar> = 0 > phi(-e_m) = -m. The
/// combinations -e_k - t e_m add pressure on the support itself.
inline std::vector<SparseSeq> refutation_points(const SparseSeq& xstar) {
  const std::size_t m = xstar.max_index() + 1;
  std::vector<SparseSeq> pts{-SparseSeq::basis(m), -SparseSeq::basis(m + 1)};
  for (const auto& [k, v] : xstar.entries()) {
    (void)v;
    pts.push_back(-SparseSeq::basis(k) - SparseSeq::basis(m, Rational(1, 2)));
  }
  return pts;
}

} // namespace conelab::pathology
