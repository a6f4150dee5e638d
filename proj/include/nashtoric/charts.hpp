#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nashtoric/newton.hpp"

namespace nashtoric {

/// A normalized-blowup chart is exactly a localization cone.
using NormalizedChart = LocalizationCone;

inline bool normalized_chart_is_smooth(const NormalizedChart& c) {
  return abs(det2(c.gen1, c.gen2)) == 1;
}

namespace detail {

/// Decision procedure for membership in the semigroup generated by a finite
/// set of lattice vectors spanning a pointed cone.
///
/// Setup finds the angular extremes of the generators; if they do not fit in
/// a strongly convex cone the search would not terminate and setup throws.
/// A primitive interior point ell of the dual cone grades every generator
/// with a positive weight, so any representation of a target uses at most
/// ell(target) summands. The search walks target - g recursively, pruning
/// remainders that leave the cone, memoizing failures, and short-circuiting
/// through a determinant-one generator pair when one exists (a remainder is
/// then a member iff its integer coordinates in that pair are nonnegative).
class MembershipSearch {
 public:
  explicit MembershipSearch(const std::set<LatticeVector>& generators) {
    for (const auto& g : generators)
      if (!g.is_zero()) gens_.push_back(g);
    if (gens_.empty()) return;

    const LatticeVector* lo = nullptr;
    const LatticeVector* hi = nullptr;
    for (const auto& c : gens_) {
      bool is_lo = true, is_hi = true;
      for (const auto& g : gens_) {
        if (det2(c, g) < 0) is_lo = false;
        if (det2(g, c) < 0) is_hi = false;
        if (!is_lo && !is_hi) break;
      }
      if (is_lo && lo == nullptr) lo = &c;
      if (is_hi && hi == nullptr) hi = &c;
    }
    bool pointed = false;
    if (lo != nullptr && hi != nullptr) {
      Int d = det2(*lo, *hi);
      if (d > 0) {
        pointed = true;
      } else if (d == 0) {
        single_ray_ = true;
        pointed = true;
        for (const auto& g : gens_)
          if (det2(*lo, g) != 0 || dot(*lo, g) <= 0) {
            pointed = false;
            break;
          }
      }
    }
    if (!pointed)
      throw std::invalid_argument("unpointed semigroup; membership search would not terminate");

    lo_ = primitive_part(*lo);
    hi_ = primitive_part(*hi);
    ell_ = single_ray_ ? lo_ : primitive_part(LatticeVector{hi_.y - lo_.y, lo_.x - hi_.x});

    for (std::size_t i = 0; i < gens_.size() && !unimodular_; ++i)
      for (std::size_t j = i + 1; j < gens_.size() && !unimodular_; ++j) {
        Int d = det2(gens_[i], gens_[j]);
        if (d == 1) unimodular_ = {gens_[i], gens_[j]};
        if (d == -1) unimodular_ = {gens_[j], gens_[i]};
      }

    weights_.reserve(gens_.size());
    for (const auto& g : gens_) weights_.push_back(dot(ell_, g));
    // heaviest first: representations of large targets are found greedily
    std::vector<std::size_t> order(gens_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      if (weights_[l] != weights_[r]) return weights_[l] > weights_[r];
      return gens_[l] < gens_[r];
    });
    std::vector<LatticeVector> gs;
    std::vector<Int> ws;
    for (std::size_t i : order) {
      gs.push_back(gens_[i]);
      ws.push_back(weights_[i]);
    }
    gens_ = std::move(gs);
    weights_ = std::move(ws);
  }

  bool contains(const LatticeVector& target) {
    if (target.is_zero()) return true;
    if (gens_.empty()) return false;
    if (!in_cone(target)) return false;
    return search(target);
  }

  /// The grading functional: a primitive interior dual point, positive on
  /// every nonzero lattice point of the generator cone.
  const LatticeVector& grading() const { return ell_; }
  bool empty() const { return gens_.empty(); }

 private:
  bool in_cone(const LatticeVector& v) const {
    if (single_ray_) return det2(lo_, v) == 0 && dot(lo_, v) > 0;
    return det2(lo_, v) >= 0 && det2(v, hi_) >= 0;
  }

  bool unimodular_tail(const LatticeVector& v) const {
    if (!unimodular_) return false;
    const auto& [u, w] = *unimodular_;
    return det2(v, w) >= 0 && det2(u, v) >= 0;
  }

  // iterative depth-first search; ell strictly decreases along any path
  bool search(const LatticeVector& root) {
    struct Frame {
      LatticeVector t;
      Int weight;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({root, dot(ell_, root), 0});
    bool result = false;

    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == 0) {
        if (unimodular_tail(f.t)) {
          resolve(stack, true, result);
          continue;
        }
        auto it = memo_.find(f.t);
        if (it != memo_.end()) {
          resolve(stack, it->second, result);
          continue;
        }
      }
      bool descended = false;
      while (f.next < gens_.size()) {
        std::size_t i = f.next++;
        if (weights_[i] > f.weight) continue;
        LatticeVector rest = f.t - gens_[i];
        if (rest.is_zero()) {
          resolve(stack, true, result);
          descended = true;  // resolved; leave the scan loop
          break;
        }
        if (!in_cone(rest)) continue;
        stack.push_back({std::move(rest), f.weight - weights_[i], 0});
        descended = true;
        break;
      }
      if (!descended) resolve(stack, false, result);
    }
    return result;
  }

  // records the outcome for the top frame; a success propagates to all parents
  template <typename Stack>
  void resolve(Stack& stack, bool value, bool& result) {
    memo_[stack.back().t] = value;
    stack.pop_back();
    if (value) {
      while (!stack.empty()) {
        memo_[stack.back().t] = true;
        stack.pop_back();
      }
      result = true;
    } else if (stack.empty()) {
      result = false;
    }
  }

  std::vector<LatticeVector> gens_;
  std::vector<Int> weights_;
  LatticeVector lo_, hi_, ell_;
  bool single_ray_ = false;
  std::optional<std::pair<LatticeVector, LatticeVector>> unimodular_;
  std::map<LatticeVector, bool> memo_;
};

/// Irreducible subset of a deduplicated generator set. Any representation of
/// g uses only generators of strictly smaller ell-weight, so scanning upward
/// by weight and testing against the kept prefix reaches the same fixed point
/// as repeated removal, independent of processing order.
inline std::set<LatticeVector> minimal_generating_set(const std::set<LatticeVector>& raw) {
  MembershipSearch whole(raw);  // validates the common pointed cone
  if (whole.empty()) return {};
  const LatticeVector ell = whole.grading();

  std::vector<std::pair<Int, LatticeVector>> graded;
  for (const auto& g : raw)
    if (!g.is_zero()) graded.push_back({dot(ell, g), g});
  std::sort(graded.begin(), graded.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    return l.second < r.second;
  });

  // kept generators appear in weight order, so the strictly lighter ones form a prefix
  std::vector<std::pair<Int, LatticeVector>> kept_in_order;
  for (const auto& [weight, g] : graded) {
    std::set<LatticeVector> candidates;
    for (const auto& [kw, kg] : kept_in_order) {
      if (kw >= weight) break;
      candidates.insert(kg);
    }
    MembershipSearch search(candidates);
    if (!search.contains(g)) kept_in_order.push_back({weight, g});
  }
  std::set<LatticeVector> kept;
  for (const auto& [w, g] : kept_in_order) kept.insert(g);
  return kept;
}

}  // namespace detail

/// True iff target is a finite N-combination of the generators.
inline bool member(const LatticeVector& target, const std::set<LatticeVector>& generators) {
  detail::MembershipSearch search(generators);
  return search.contains(target);
}

/// Non-normalized blowup chart at vertex i: the semigroup generated by
/// {v_{i-1}, v_i} together with the difference sets
///   A(v_{i-1}) = { v_j - v_{i-1} : j != i-1, i },
///   A(v_i)     = { v_j - v_i     : j != i-1, i },
/// living inside the localization cone.
struct SemigroupChart {
  int vertex_index;
  std::set<LatticeVector> raw_generators;
  std::set<LatticeVector> minimal_generators;
  Cone2 ambient_cone;
};

inline SemigroupChart semigroup_chart(const ContinuedFraction& cf, int i) {
  LocalizationCone loc = localization_cone(cf, i);  // validates the vertex
  ConvergentTable t(cf);
  std::set<LatticeVector> raw;
  raw.insert(t.v(i - 1));
  raw.insert(t.v(i));
  for (int j = 0; j <= cf.r(); ++j) {
    if (j == i - 1 || j == i) continue;
    raw.insert(t.v(j) - t.v(i - 1));
    raw.insert(t.v(j) - t.v(i));
  }
  for (const auto& g : raw)
    if (det2(loc.gen1, g) < 0 || det2(g, loc.gen2) < 0)
      throw std::logic_error("chart generator escapes the localization cone");
  std::set<LatticeVector> minimal = detail::minimal_generating_set(raw);
  return {i, std::move(raw), std::move(minimal), Cone2(loc.gen1, loc.gen2)};
}

struct SaturationReport {
  bool saturated;
  std::optional<LatticeVector> witness;   // a cone Hilbert element outside the semigroup
  std::optional<Int> witness_multiple;    // least k >= 2 with k*witness inside, if found
};

/// Hilbert basis of cone ∩ Z^2, computed through the normal form and pulled
/// back with the inverse map.
inline std::vector<LatticeVector> cone_hilbert_basis(const Cone2& cone) {
  NormalForm nf = normal_form(cone);
  UnimodularMap back = nf.map.inverse();
  std::vector<LatticeVector> out;
  if (nf.q == 1) {
    out.push_back(back.apply({1, 0}));
    out.push_back(back.apply({0, 1}));
  } else {
    for (const auto& v : hilbert_basis(hj_expand(nf.p, nf.q))) out.push_back(back.apply(v));
  }
  return out;
}

/// The chart is saturated iff every Hilbert element of its cone belongs to the
/// semigroup. On failure the first missing element is reported together with
/// its least member multiple, searched up to multiple_cap (values below 2 fall
/// back to max(2, cone index)).
inline SaturationReport is_saturated(const SemigroupChart& chart, const Int& multiple_cap = 0) {
  detail::MembershipSearch search(chart.minimal_generators);
  for (const auto& h : cone_hilbert_basis(chart.ambient_cone)) {
    if (search.contains(h)) continue;
    SaturationReport report{false, h, std::nullopt};
    Int cap = multiple_cap;
    if (cap < 2) {
      Int index = abs(det2(chart.ambient_cone.u(), chart.ambient_cone.v()));
      cap = index > 2 ? index : Int(2);
    }
    for (Int k = 2; k <= cap; ++k)
      if (search.contains(k * h)) {
        report.witness_multiple = k;
        break;
      }
    return report;
  }
  return {true, std::nullopt, std::nullopt};
}

/// Smoothness of the non-normalized chart, by two independent routes that are
/// asserted to agree: exactly two minimal generators of determinant +-1, and
/// saturation combined with smoothness of the ambient cone.
inline bool nash_chart_is_smooth(const SemigroupChart& chart, const SaturationReport& saturation) {
  bool by_generators = false;
  if (chart.minimal_generators.size() == 2) {
    auto it = chart.minimal_generators.begin();
    const LatticeVector& g1 = *it;
    const LatticeVector& g2 = *std::next(it);
    by_generators = abs(det2(g1, g2)) == 1;
  }
  bool ambient_smooth = abs(det2(chart.ambient_cone.u(), chart.ambient_cone.v())) == 1;
  bool by_normalization = saturation.saturated && ambient_smooth;
  if (by_generators != by_normalization)
    throw std::logic_error("smoothness routes disagree on a semigroup chart");
  return by_generators;
}

inline bool nash_chart_is_smooth(const SemigroupChart& chart) {
  return nash_chart_is_smooth(chart, is_saturated(chart));
}

}  // namespace nashtoric
