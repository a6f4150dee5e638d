#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nashtoric/lattice.hpp"

namespace nashtoric {

/// Minus-sign continued fraction [a_1, ..., a_r] of a normal toric surface:
/// a_1 = 1, a_i >= 2 for i >= 2, r >= 2.
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<Int> terms) : terms_(std::move(terms)) {
    if (terms_.size() < 2) throw std::invalid_argument("continued fraction needs at least two terms");
    if (terms_.front() != 1) throw std::invalid_argument("leading term must be 1");
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (terms_[i] < 2) throw std::invalid_argument("terms after the first must be at least 2");
  }

  int r() const { return static_cast<int>(terms_.size()); }
  /// 1-based access: a(1) == 1.
  const Int& a(int i) const { return terms_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Int>& terms() const { return terms_; }

  friend bool operator==(const ContinuedFraction& l, const ContinuedFraction& r) {
    return l.terms_ == r.terms_;
  }

 private:
  std::vector<Int> terms_;
};

/// Reduced fraction p/q.
struct Fraction {
  Int p;
  Int q;
  friend bool operator==(const Fraction& l, const Fraction& r) { return l.p == r.p && l.q == r.q; }
};

/// The recurrence tables
///   p_{-1} = 0, p_0 = 1, p_i = a_i p_{i-1} - p_{i-2}   (1 <= i <= r)
///   q_0 = 0,  q_1 = 1,  q_i = a_i q_{i-1} - q_{i-2}    (2 <= i <= r)
/// with v_i = (p_i, q_i) the Hilbert basis members.
class ConvergentTable {
 public:
  explicit ConvergentTable(const ContinuedFraction& cf) : r_(cf.r()) {
    p_.reserve(static_cast<std::size_t>(r_) + 2);
    q_.reserve(static_cast<std::size_t>(r_) + 1);
    p_.push_back(0);
    p_.push_back(1);
    q_.push_back(0);
    q_.push_back(1);
    for (int i = 1; i <= r_; ++i) p_.push_back(cf.a(i) * p(i - 1) - p(i - 2));
    for (int i = 2; i <= r_; ++i) q_.push_back(cf.a(i) * q(i - 1) - q(i - 2));
  }

  /// p_i for -1 <= i <= r.
  const Int& p(int i) const {
    if (i < -1 || i > r_) throw std::out_of_range("convergent index out of range");
    return p_[static_cast<std::size_t>(i + 1)];
  }
  /// q_i for 0 <= i <= r.
  const Int& q(int i) const {
    if (i < 0 || i > r_) throw std::out_of_range("convergent index out of range");
    return q_[static_cast<std::size_t>(i)];
  }
  /// v_i = (p_i, q_i) for 0 <= i <= r.
  LatticeVector v(int i) const { return {p(i), q(i)}; }
  int r() const { return r_; }

 private:
  int r_;
  std::vector<Int> p_;
  std::vector<Int> q_;
};

inline ConvergentTable convergents(const ContinuedFraction& cf) { return ConvergentTable(cf); }

/// Value of the whole fraction, in lowest terms: (p_r, q_r).
inline Fraction evaluate(const ContinuedFraction& cf) {
  ConvergentTable t(cf);
  return {t.p(cf.r()), t.q(cf.r())};
}

/// Minus-sign expansion of p/q with 0 < p < q and gcd(p, q) = 1. The expansion
/// whose terms after the first are all >= 2 is unique.
inline ContinuedFraction hj_expand(const Int& p, const Int& q) {
  if (q >= 1 && (p == 0 || q == 1)) throw std::invalid_argument("cone is smooth; no continued fraction");
  if (q < 1 || p < 0 || p >= q) throw std::invalid_argument("not in normal-form range");
  if (gcd(p, q) != 1) throw std::invalid_argument("not in lowest terms");

  std::vector<Int> terms;
  Int num = p, den = q;
  while (true) {
    Int a = ceil_div(num, den);
    terms.push_back(a);
    Int rem = a * den - num;  // 0 <= rem < den
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return ContinuedFraction(std::move(terms));
}

/// [v_0, ..., v_r]: the Hilbert basis of the cone's lattice semigroup.
inline std::vector<LatticeVector> hilbert_basis(const ContinuedFraction& cf) {
  ConvergentTable t(cf);
  std::vector<LatticeVector> basis;
  basis.reserve(static_cast<std::size_t>(cf.r()) + 1);
  for (int i = 0; i <= cf.r(); ++i) basis.push_back(t.v(i));
  return basis;
}

/// Independent oracle: enumerate all lattice points of R>=0{(1,0),(p,q)} inside
/// the box [0,q]^2 and keep those not expressible as a sum of two nonzero cone
/// points. Every irreducible element lies in the box, and both summands of any
/// reducible box point stay in the box, so the search is complete.
inline std::set<LatticeVector> hilbert_basis_bruteforce(const Int& p, const Int& q) {
  if (q < 1 || p < 0 || p >= q) {
    if (!(p == 0 && q == 1)) throw std::invalid_argument("not in normal-form range");
  }
  if (gcd(p, q) != 1) throw std::invalid_argument("not in lowest terms");

  auto in_cone = [&](const Int& x, const Int& y) { return y >= 0 && q * x - p * y >= 0; };
  std::vector<LatticeVector> points;  // ascending lexicographic
  std::set<LatticeVector> point_set;
  for (Int x = 0; x <= q; ++x)
    for (Int y = 0; y <= q; ++y) {
      if (x == 0 && y == 0) continue;
      if (in_cone(x, y)) {
        points.push_back({x, y});
        point_set.insert({x, y});
      }
    }

  std::set<LatticeVector> basis;
  for (const auto& w : points) {
    bool reducible = false;
    for (const auto& u : points) {
      if (u.x > w.x) break;
      if (u.y > w.y || u == w) continue;
      if (point_set.count(w - u)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.insert(w);
  }
  return basis;
}

/// p_i q_j - p_j q_i for 0 <= i < j <= r: the lowest-terms denominator of the
/// sub-fraction [a_{i+1}, ..., a_j].
inline Int segment_denominator(const ContinuedFraction& cf, int i, int j) {
  if (i < 0 || j > cf.r() || i >= j) throw std::out_of_range("segment indices out of range");
  ConvergentTable t(cf);
  return t.p(i) * t.q(j) - t.p(j) * t.q(i);
}

}  // namespace nashtoric
