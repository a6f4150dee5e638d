#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nashtoric {

/// Arbitrary-precision signed integer used for all lattice data.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

struct BezoutPair {
  Int g;  // gcd(a, b), nonnegative
  Int s;  // s*a + t*b == g
  Int t;
};

inline BezoutPair extended_gcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int quot = a / b;
    Int rem = a - quot * b;
    a = b;
    b = rem;
    Int s2 = s0 - quot * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

/// Floor quotient; b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Ceiling quotient; b must be nonzero.
inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

}  // namespace nashtoric
