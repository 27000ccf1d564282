#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "conelab/core/error.hpp"
#include "conelab/core/rational.hpp"

namespace conelab {

/// Finitely supported real sequence indexed from 1, with exact entries.
/// Zero entries are never stored.
class SparseSeq {
public:
  SparseSeq() = default;

  /// The n-th unit vector e_n.
  static SparseSeq basis(std::size_t n, const Rational& coeff = 1) {
    SparseSeq s;
    s.set(n, coeff);
    return s;
  }

  const std::map<std::size_t, Rational>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t max_index() const noexcept { return entries_.empty() ? 0 : entries_.rbegin()->first; }

  Rational get(std::size_t n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  void set(std::size_t n, const Rational& v) {
    if (n == 0) throw Error("out-of-range", "sequence indices start at 1");
    if (v == 0) {
      entries_.erase(n);
    } else {
      entries_[n] = v;
    }
  }

  SparseSeq& operator+=(const SparseSeq& o) {
    for (const auto& [n, v] : o.entries_) set(n, get(n) + v);
    return *this;
  }
  SparseSeq& operator-=(const SparseSeq& o) {
    for (const auto& [n, v] : o.entries_) set(n, get(n) - v);
    return *this;
  }
  SparseSeq& operator*=(const Rational& t) {
    if (t == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [n, v] : entries_) v *= t;
    return *this;
  }

  friend SparseSeq operator+(SparseSeq a, const SparseSeq& b) { return a += b; }
  friend SparseSeq operator-(SparseSeq a, const SparseSeq& b) { return a -= b; }
  friend SparseSeq operator*(const Rational& t, SparseSeq a) { return a *= t; }
  SparseSeq operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const SparseSeq& a, const SparseSeq& b) { return a.entries_ == b.entries_; }

  Rational dot(const SparseSeq& o) const {
    Rational s = 0;
    const auto& small = entries_.size() <= o.entries_.size() ? entries_ : o.entries_;
    const auto& large = entries_.size() <= o.entries_.size() ? o.entries_ : entries_;
    for (const auto& [n, v] : small) {
      if (auto it = large.find(n); it != large.end()) s += v * it->second;
    }
    return s;
  }

  /// Squared l2 norm.
  Rational norm_sq() const { return dot(*this); }

  std::string describe() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, v] : entries_) {
      if (!first) os << " + ";
      first = false;
      os << format_rational(v) << "*e" << n;
    }
    return os.str();
  }

private:
  std::map<std::size_t, Rational> entries_;
};

} // namespace conelab
