#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "conelab/core/error.hpp"

namespace conelab {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("division-by-zero", "rational with zero denominator");
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

/// 2^k as an exact rational, k may be negative.
inline Rational pow2(int k) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

/// Always "p/q", including integers ("2/1").
inline std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Accepts "p/q", integers and plain decimals ("0.25", "-1.5").
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error("bad-number", "cannot parse '" + std::string(text) + "' as a rational"); };
  if (text.empty()) throw bad();
  std::string s(text);
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      mpz_class num(s.substr(0, slash), 10), den(s.substr(slash + 1), 10);
      if (den == 0) throw bad();
      Rational q{num, den};
      q.canonicalize();
      return q;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits == "+") throw bad();
      for (std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw bad();
      mpz_class den = 1;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
      if (digits[0] == '+') digits.erase(0, 1);
      Rational q{mpz_class(digits, 10), den};
      q.canonicalize();
      return q;
    }
    if (s[0] == '+') s.erase(0, 1);
    return Rational(mpz_class(s, 10));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

/// Nearest rational with denominator 10^digits.
inline Rational rationalize(double x, int digits = 12) {
  if (!std::isfinite(x)) throw Error("bad-number", "cannot rationalize a non-finite double");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = Rational(x) * scale + Rational(1, 2);
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational q{rounded, scale};
  q.canonicalize();
  return q;
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw Error("dimension-mismatch", "dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace conelab
