#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "conelab/core/error.hpp"
#include "conelab/core/extended_real.hpp"
#include "conelab/core/rational.hpp"

namespace conelab {

/// n = outer^2 * radicand with radicand squarefree.
struct SquarefreeSplit {
  std::uint64_t outer = 1;
  std::uint64_t radicand = 1;
};

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

/// Trial division up to 2^21. A leftover cofactor below 2^63 with no such
/// factor has at most two prime factors, so it is squarefree unless it is a
/// perfect square.
inline SquarefreeSplit squarefree_split(std::uint64_t n) {
  if (n == 0) throw Error("out-of-range", "squarefree_split(0)");
  SquarefreeSplit out;
  constexpr std::uint64_t kTrialBound = 1ULL << 21;
  auto take = [&](std::uint64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) out.outer *= p;
    if (e % 2) out.radicand *= p;
  };
  take(2);
  std::uint64_t p = 3;
  for (; p <= kTrialBound && p <= n / p; p += 2) take(p);
  if (n == 1) return out;
  if (p > n / p) { // n is prime
    out.radicand *= n;
    return out;
  }
  if (n >= (1ULL << 63)) throw Error("out-of-range", "cofactor too large to classify");
  auto r = isqrt_u64(n);
  if (r * r == n) {
    out.outer *= r;
  } else {
    out.radicand *= n;
  }
  return out;
}

/// Exact element of the field Q(sqrt 2, sqrt 3, ...): a finite sum
/// sum_s c_s * sqrt(s) over distinct squarefree radicands s with rational
/// coefficients. Because square roots of distinct squarefree integers are
/// linearly independent over Q, equality is coefficientwise; the sign of a
/// nonzero sum is settled by interval refinement.
class RadicalSum {
public:
  RadicalSum() = default;
  RadicalSum(const Rational& q) { add_term(1, q); } // NOLINT(google-explicit-constructor)
  RadicalSum(long v) : RadicalSum(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  RadicalSum(int v) : RadicalSum(Rational(v)) {}    // NOLINT(google-explicit-constructor)

  /// sqrt(q) for q >= 0 whose reduced numerator * denominator (or numerator
  /// alone when the denominator is a square) fits in 64 bits.
  static RadicalSum sqrt(const Rational& q) {
    if (q < 0) throw Error("out-of-range", "sqrt of a negative rational");
    RadicalSum out;
    if (q == 0) return out;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(den.get_mpz_t())) {
      mpz_class root;
      mpz_sqrt(root.get_mpz_t(), den.get_mpz_t());
      auto split = squarefree_split(to_u64(num));
      out.add_term(split.radicand, Rational(mpz_class(static_cast<unsigned long>(split.outer)), root));
      return out;
    }
    mpz_class prod = num * den;
    auto split = squarefree_split(to_u64(prod));
    out.add_term(split.radicand, Rational(mpz_class(static_cast<unsigned long>(split.outer)), den));
    return out;
  }

  const std::map<std::uint64_t, Rational>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

  RadicalSum& operator+=(const RadicalSum& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }
  RadicalSum& operator-=(const RadicalSum& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, Rational(-c));
    return *this;
  }
  RadicalSum& operator*=(const Rational& t) {
    if (t == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, c] : terms_) c *= t;
    return *this;
  }

  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(RadicalSum a, const Rational& t) { return a *= t; }
  friend RadicalSum operator*(const Rational& t, RadicalSum a) { return a *= t; }
  RadicalSum operator-() const {
    RadicalSum r = *this;
    for (auto& [s, c] : r.terms_) c = -c;
    return r;
  }

  /// -1, 0 or +1.
  int sign() const {
    if (terms_.empty()) return 0;
    if (is_rational()) return sgn(terms_.begin()->second);
    for (unsigned bits = 32; bits <= 8192; bits *= 2) {
      Rational lo = 0, hi = 0;
      for (const auto& [s, c] : terms_) {
        if (s == 1) {
          lo += c;
          hi += c;
          continue;
        }
        mpz_class scaled(static_cast<unsigned long>(s));
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
        Rational rlo = Rational(root) / pow2(static_cast<int>(bits));
        Rational rhi = Rational(root + 1) / pow2(static_cast<int>(bits));
        if (c > 0) {
          lo += c * rlo;
          hi += c * rhi;
        } else {
          lo += c * rhi;
          hi += c * rlo;
        }
      }
      if (lo > 0) return 1;
      if (hi < 0) return -1;
    }
    throw Error("precision", "could not resolve the sign of a radical sum");
  }

  double to_double() const {
    double v = 0;
    for (const auto& [s, c] : terms_) v += c.get_d() * std::sqrt(static_cast<double>(s));
    return v;
  }

  std::string describe() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << format_rational(c);
      if (s != 1) os << "*sqrt(" << s << ")";
    }
    return os.str();
  }

  friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const RadicalSum& a, const RadicalSum& b) { return !(a == b); }
  friend bool operator<(const RadicalSum& a, const RadicalSum& b) { return (a - b).sign() < 0; }
  friend bool operator>(const RadicalSum& a, const RadicalSum& b) { return b < a; }
  friend bool operator<=(const RadicalSum& a, const RadicalSum& b) { return !(b < a); }
  friend bool operator>=(const RadicalSum& a, const RadicalSum& b) { return !(a < b); }

private:
  static std::uint64_t to_u64(const mpz_class& z) {
    if (z < 0 || !mpz_fits_ulong_p(z.get_mpz_t())) throw Error("out-of-range", "radicand exceeds 64 bits");
    return mpz_get_ui(z.get_mpz_t());
  }

  void add_term(std::uint64_t s, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<std::uint64_t, Rational> terms_;
};

template <>
struct value_traits<RadicalSum> {
  using scale_type = Rational;
  static constexpr bool exact = true;
  static double to_double(const RadicalSum& v) { return v.to_double(); }
  static std::string describe(const RadicalSum& v) { return v.describe(); }
};

using ExtRadical = ExtendedReal<RadicalSum>;

} // namespace conelab
