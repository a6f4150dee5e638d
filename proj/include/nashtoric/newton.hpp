#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "nashtoric/cfrac.hpp"

namespace nashtoric {

/// Exponents v_j + v_k of the log-Jacobian ideal generators whose pair
/// determinant is nonzero modulo char_p (char_p = 0: nonzero over Z).
struct LogJacobianGenerators {
  Int char_p;
  std::set<LatticeVector> points;
};

inline LogJacobianGenerators log_jacobian_generators(const std::vector<LatticeVector>& basis,
                                                     const Int& char_p) {
  if (char_p < 0 || char_p == 1) throw std::invalid_argument("invalid characteristic");
  LogJacobianGenerators out{char_p, {}};
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t k = j + 1; k < basis.size(); ++k) {
      Int d = det2(basis[j], basis[k]);
      bool keep = (char_p == 0) ? (d != 0) : (d % char_p != 0);
      if (keep) out.points.insert(basis[j] + basis[k]);
    }
  return out;
}

/// Indices i in {1,...,r} whose consecutive sum w_i = v_{i-1} + v_i is a
/// Newton polyhedron vertex. Extremal indices 1 and r always qualify; an
/// interior index drops out exactly when a_i = 2 and a_{i+1} = 2.
struct NewtonVertexSet {
  std::vector<int> indices;           // ascending
  std::vector<LatticeVector> points;  // w_i, parallel to indices

  bool contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
  }
};

inline NewtonVertexSet newton_vertices(const ContinuedFraction& cf) {
  ConvergentTable t(cf);
  NewtonVertexSet out;
  const int r = cf.r();
  for (int i = 1; i <= r; ++i) {
    bool vertex = (i == 1 || i == r) || !(cf.a(i) == 2 && cf.a(i + 1) == 2);
    if (vertex) {
      out.indices.push_back(i);
      out.points.push_back(t.v(i - 1) + t.v(i));
    }
  }
  return out;
}

/// Geometric oracle: exact vertex set of Conv(union of (g + cone)) over the
/// generator points g.
///
/// In the coordinates alpha = det(g, b), beta = det(a, g) given by the
/// oriented primitive rays a, b of the cone, the recession cone becomes the
/// first quadrant (up to positive scaling), so the vertices are the extreme
/// points of the Pareto-minimal staircase. Integer arithmetic throughout.
inline std::set<LatticeVector> newton_vertices_hull(const LogJacobianGenerators& gens,
                                                    const Cone2& cone) {
  if (gens.points.empty()) throw std::invalid_argument("empty generator set");
  LatticeVector a = primitive_part(cone.u());
  LatticeVector b = primitive_part(cone.v());
  if (det2(a, b) < 0) std::swap(a, b);

  struct Pt {
    Int alpha, beta;
    LatticeVector orig;
  };
  std::vector<Pt> pts;
  pts.reserve(gens.points.size());
  for (const auto& g : gens.points) pts.push_back({det2(g, b), det2(a, g), g});
  std::sort(pts.begin(), pts.end(), [](const Pt& l, const Pt& r) {
    if (l.alpha != r.alpha) return l.alpha < r.alpha;
    return l.beta < r.beta;
  });

  // Pareto-minimal points, beta strictly decreasing as alpha grows
  std::vector<Pt> staircase;
  for (const auto& p : pts)
    if (staircase.empty() || p.beta < staircase.back().beta) staircase.push_back(p);

  // extreme points of the staircase: drop points on or above a chord
  std::vector<Pt> chain;
  for (const auto& p : staircase) {
    while (chain.size() >= 2) {
      const Pt& m = chain[chain.size() - 1];
      const Pt& f = chain[chain.size() - 2];
      Int cross = (m.alpha - f.alpha) * (p.beta - m.beta) - (m.beta - f.beta) * (p.alpha - m.alpha);
      if (cross > 0) break;
      chain.pop_back();
    }
    chain.push_back(p);
  }

  std::set<LatticeVector> out;
  for (const auto& p : chain) out.insert(p.orig);
  return out;
}

/// Localization of the Newton polyhedron at vertex i, by primitive generators.
struct LocalizationCone {
  int vertex_index;
  LatticeVector gen1, gen2;
  bool smooth;  // |det2(gen1, gen2)| == 1
};

/// Primitive generators from the parity case analysis. Extremal vertices use
/// v_0 (resp. v_r) plus the primitive part of the opposite difference; for an
/// interior vertex the raw generators v_{i-2} - v_i and v_{i+1} - v_{i-1}
/// halve exactly when a_i (resp. a_{i+1}) is even.
inline LocalizationCone localization_cone(const ContinuedFraction& cf, int i) {
  if (!newton_vertices(cf).contains(i))
    throw std::invalid_argument("localization undefined at non-vertex");
  ConvergentTable t(cf);
  const int r = cf.r();
  LatticeVector g1, g2;
  if (i == 1) {
    g1 = t.v(0);
    g2 = primitive_part(t.v(2) - t.v(0));
  } else if (i == r) {
    g1 = primitive_part(t.v(r - 2) - t.v(r));
    g2 = t.v(r);
  } else {
    const Int& ai = cf.a(i);
    const Int& an = cf.a(i + 1);
    if (ai % 2 == 0) {
      Int m = ai / 2;
      g1 = {t.p(i - 2) - m * t.p(i - 1), t.q(i - 2) - m * t.q(i - 1)};
    } else {
      g1 = {2 * t.p(i - 2) - ai * t.p(i - 1), 2 * t.q(i - 2) - ai * t.q(i - 1)};
    }
    if (an % 2 == 0) {
      Int n = an / 2;
      g2 = {n * t.p(i) - t.p(i - 1), n * t.q(i) - t.q(i - 1)};
    } else {
      g2 = {an * t.p(i) - 2 * t.p(i - 1), an * t.q(i) - 2 * t.q(i - 1)};
    }
  }
  return {i, g1, g2, abs(det2(g1, g2)) == 1};
}

/// The same cone with unprimitivized difference generators; an independent
/// route whose primitive parts must reproduce localization_cone.
inline Cone2 localization_cone_raw(const ContinuedFraction& cf, int i) {
  if (!newton_vertices(cf).contains(i))
    throw std::invalid_argument("localization undefined at non-vertex");
  ConvergentTable t(cf);
  const int r = cf.r();
  if (i == 1) return Cone2(t.v(0), t.v(2) - t.v(0));
  if (i == r) return Cone2(t.v(r - 2) - t.v(r), t.v(r));
  return Cone2(t.v(i - 2) - t.v(i), t.v(i + 1) - t.v(i - 1));
}

}  // namespace nashtoric
