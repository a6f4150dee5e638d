#pragma once

#include <stdexcept>
#include <utility>

#include "nashtoric/integers.hpp"

namespace nashtoric {

/// A point of the lattice Z^2. Negative coordinates are legal.
struct LatticeVector {
  Int x{};
  Int y{};

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a.x - b.x, a.y - b.y};
  }
  LatticeVector operator-() const { return {-x, -y}; }
  friend LatticeVector operator*(const Int& k, const LatticeVector& v) {
    return {k * v.x, k * v.y};
  }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }

  bool is_zero() const { return x == 0 && y == 0; }
};

inline Int dot(const LatticeVector& a, const LatticeVector& b) { return a.x * b.x + a.y * b.y; }

/// Determinant of the 2x2 matrix with rows u and v.
inline Int det2(const LatticeVector& u, const LatticeVector& v) { return u.x * v.y - u.y * v.x; }

/// The primitive vector on the ray of v, i.e. v divided by gcd(|x|, |y|).
inline LatticeVector primitive_part(const LatticeVector& v) {
  if (v.is_zero()) throw std::invalid_argument("zero vector has no direction");
  Int g = gcd(abs(v.x), abs(v.y));
  return {v.x / g, v.y / g};
}

/// Element of SL(2,Z), row-major.
class UnimodularMap {
 public:
  UnimodularMap() = default;
  UnimodularMap(Int a, Int b, Int c, Int d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) throw std::invalid_argument("matrix is not in SL(2,Z)");
  }

  LatticeVector apply(const LatticeVector& v) const {
    return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y};
  }
  UnimodularMap inverse() const { return {d_, -b_, -c_, a_}; }
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  friend UnimodularMap operator*(const UnimodularMap& l, const UnimodularMap& r) {
    return {l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
            l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_};
  }
  friend bool operator==(const UnimodularMap& l, const UnimodularMap& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

 private:
  Int a_{1}, b_{0}, c_{0}, d_{1};
};

/// Strongly convex rational cone in R^2, spanned by two non-parallel rays.
class Cone2 {
 public:
  Cone2(LatticeVector u, LatticeVector v) : u_(std::move(u)), v_(std::move(v)) {
    if (det2(u_, v_) == 0) throw std::invalid_argument("degenerate cone: ray generators are parallel");
  }

  const LatticeVector& u() const { return u_; }
  const LatticeVector& v() const { return v_; }

  friend bool operator==(const Cone2& l, const Cone2& r) { return l.u_ == r.u_ && l.v_ == r.v_; }

 private:
  LatticeVector u_, v_;
};

/// A cone rewritten as R>=0{(1,0),(p,q)} with 0 <= p < q and gcd(p,q) = 1,
/// together with the SL(2,Z) element that got it there.
struct NormalForm {
  Int p;
  Int q;
  UnimodularMap map;
};

// Orient the primitive rays positively, send the first one to (1,0) by a
// determinant-one map, then shear the second ray's first coordinate into [0, q).
inline NormalForm normal_form(const Cone2& cone) {
  LatticeVector a = primitive_part(cone.u());
  LatticeVector b = primitive_part(cone.v());
  if (det2(a, b) < 0) std::swap(a, b);
  BezoutPair bz = extended_gcd(a.x, a.y);
  UnimodularMap to_e1{bz.s, bz.t, -a.y, a.x};
  LatticeVector w = to_e1.apply(b);  // w.y == det2(a, b) > 0
  Int k = -floor_div(w.x, w.y);
  UnimodularMap shear{1, k, 0, 1};
  return {w.x + k * w.y, w.y, shear * to_e1};
}

}  // namespace nashtoric
