#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "nashtoric/charts.hpp"

namespace nashtoric {

enum class Mode { normalized, nash };

inline const char* to_string(Mode m) { return m == Mode::normalized ? "normalized" : "nash"; }

/// Literal classification pattern for one-step resolution by the normalized
/// blowup. Kept independent of the geometric code on purpose: the exhaustive
/// verifier compares the two.
inline bool normalized_one_step_pattern(const ContinuedFraction& cf) {
  const int r = cf.r();
  auto pair_ok = [](const Int& x, const Int& y) {
    return (x == 2 && y == 2) || (x == 2 && y == 3) || (x == 2 && y == 4) ||
           (x == 3 && y == 2) || (x == 4 && y == 2);
  };
  if (r == 2) return cf.a(2) == 2;
  if (r == 3) return cf.a(2) == 2 && cf.a(3) == 2;
  if (r == 4) return cf.a(2) == 2 && cf.a(4) == 2 && cf.a(3) >= 2 && cf.a(3) <= 4;
  if (cf.a(2) != 2 || cf.a(r) != 2) return false;
  for (int i = 3; i <= r - 2; ++i)
    if (!pair_ok(cf.a(i), cf.a(i + 1))) return false;
  return true;
}

/// Literal classification pattern for one-step resolution by the
/// non-normalized blowup (characteristic zero).
inline bool nash_one_step_pattern(const ContinuedFraction& cf) {
  const int r = cf.r();
  auto pair_ok = [](const Int& x, const Int& y) {
    return (x == 2 && y == 2) || (x == 2 && y == 3) || (x == 3 && y == 2);
  };
  if (r == 2) return cf.a(2) == 2;
  if (r == 3) return cf.a(2) == 2 && cf.a(3) == 2;
  if (r == 4) return cf.a(2) == 2 && cf.a(4) == 2 && cf.a(3) >= 2 && cf.a(3) <= 3;
  if (cf.a(2) != 2 || cf.a(r) != 2) return false;
  for (int i = 3; i <= r - 2; ++i)
    if (!pair_ok(cf.a(i), cf.a(i + 1))) return false;
  return true;
}

inline bool one_step_pattern(const ContinuedFraction& cf, Mode mode) {
  return mode == Mode::normalized ? normalized_one_step_pattern(cf) : nash_one_step_pattern(cf);
}

struct VertexReport {
  LocalizationCone cone;
  std::optional<SemigroupChart> chart;         // nash mode only
  std::optional<SaturationReport> saturation;  // nash mode only
  bool smooth;
};

struct AnalysisReport {
  Int p, q;
  std::optional<ContinuedFraction> cf;  // absent when the surface is already smooth
  Mode mode;
  Int char_p;
  std::vector<VertexReport> vertices;
  bool all_smooth;
  bool predicate_verdict;
  bool consistent;  // all_smooth == predicate_verdict
};

/// Full chart analysis of one surface. The vertex set is computed from the
/// polyhedron geometry at the requested characteristic and matched against
/// the term criterion; each chart's smoothness is decided geometrically, and
/// the verdict is compared with the classification pattern.
inline AnalysisReport analyze(const ContinuedFraction& cf, Mode mode, const Int& char_p = 0) {
  if (mode == Mode::nash && char_p != 0)
    throw std::invalid_argument("nash mode requires characteristic zero");
  if (char_p < 0 || char_p == 1) throw std::invalid_argument("invalid characteristic");

  std::vector<LatticeVector> basis = hilbert_basis(cf);
  Fraction pq = evaluate(cf);
  Cone2 cone({1, 0}, {pq.p, pq.q});

  std::set<LatticeVector> hull = newton_vertices_hull(log_jacobian_generators(basis, char_p), cone);
  NewtonVertexSet criterion = newton_vertices(cf);
  std::set<LatticeVector> criterion_points(criterion.points.begin(), criterion.points.end());
  if (hull != criterion_points)
    throw std::logic_error("vertex criterion disagrees with the polyhedron geometry");

  AnalysisReport report{pq.p,  pq.q, cf,    mode, char_p, {},
                        true,  one_step_pattern(cf, mode), false};
  for (int i : criterion.indices) {
    VertexReport vr{localization_cone(cf, i), std::nullopt, std::nullopt, false};
    if (mode == Mode::normalized) {
      vr.smooth = normalized_chart_is_smooth(vr.cone);
    } else {
      vr.chart = semigroup_chart(cf, i);
      vr.saturation = is_saturated(*vr.chart, std::max(Int(2), pq.q));
      vr.smooth = nash_chart_is_smooth(*vr.chart, *vr.saturation);
    }
    report.all_smooth = report.all_smooth && vr.smooth;
    report.vertices.push_back(std::move(vr));
  }
  report.consistent = (report.all_smooth == report.predicate_verdict);
  return report;
}

/// Analysis of the surface labeled by a normal form (p, q). A smooth label
/// (q = 1) yields an empty-vertex report rather than an error.
inline AnalysisReport analyze_pq(const Int& p, const Int& q, Mode mode, const Int& char_p = 0) {
  if (mode == Mode::nash && char_p != 0)
    throw std::invalid_argument("nash mode requires characteristic zero");
  if (char_p < 0 || char_p == 1) throw std::invalid_argument("invalid characteristic");
  if (q < 1 || p < 0 || p >= q) throw std::invalid_argument("not in normal-form range");
  if (gcd(p, q) != 1) throw std::invalid_argument("not in lowest terms");
  if (q == 1) return {p, q, std::nullopt, mode, char_p, {}, true, true, true};
  return analyze(hj_expand(p, q), mode, char_p);
}

inline AnalysisReport analyze_cone(const Cone2& cone, Mode mode, const Int& char_p = 0) {
  NormalForm nf = normal_form(cone);
  return analyze_pq(nf.p, nf.q, mode, char_p);
}

struct VerificationSummary {
  int max_r;
  long long max_a;
  Mode mode;
  unsigned long long total_checked;
  std::vector<std::vector<Int>> mismatches;  // lexicographic by (r, a_2, ..., a_r)
};

namespace detail {

// global index -> [1, a_2, ..., a_r] over r = 2..max_r, a_i in [2, max_a],
// lexicographic within each length block
inline std::vector<Int> nth_fraction(unsigned long long g, int max_r, long long max_a) {
  const unsigned long long base = static_cast<unsigned long long>(max_a - 1);
  for (int r = 2; r <= max_r; ++r) {
    unsigned long long block = 1;
    for (int k = 1; k < r; ++k) block *= base;
    if (g >= block) {
      g -= block;
      continue;
    }
    std::vector<Int> terms(static_cast<std::size_t>(r), Int(2));
    terms[0] = 1;
    for (int k = r; k >= 2; --k) {
      terms[static_cast<std::size_t>(k - 1)] = Int(2 + static_cast<long long>(g % base));
      g /= base;
    }
    return terms;
  }
  throw std::logic_error("enumeration index out of range");
}

}  // namespace detail

/// Exhaustively compares the geometric all-charts-smooth verdict with the
/// classification pattern over every fraction with 2 <= r <= max_r and
/// 2 <= a_i <= max_a. The enumeration may be partitioned over workers; the
/// result is merged deterministically.
inline VerificationSummary verify_classification(int max_r, long long max_a, Mode mode, int workers = 1) {
  if (max_r < 2 || max_a < 2) throw std::invalid_argument("bounds must be at least 2");
  if (workers < 1) workers = 1;

  const unsigned long long base = static_cast<unsigned long long>(max_a - 1);
  unsigned long long total = 0;
  for (int r = 2; r <= max_r; ++r) {
    unsigned long long block = 1;
    for (int k = 1; k < r; ++k) {
      if (block > (1ull << 62) / (base == 0 ? 1 : base))
        throw std::invalid_argument("enumeration too large");
      block *= base;
    }
    total += block;
  }

  using Found = std::vector<std::pair<unsigned long long, std::vector<Int>>>;
  std::vector<Found> found(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    for (unsigned long long g = static_cast<unsigned long long>(w); g < total;
         g += static_cast<unsigned long long>(workers)) {
      std::vector<Int> terms = detail::nth_fraction(g, max_r, max_a);
      ContinuedFraction cf(terms);
      AnalysisReport report = analyze(cf, mode, 0);
      if (!report.consistent) found[static_cast<std::size_t>(w)].push_back({g, std::move(terms)});
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  Found merged;
  for (auto& f : found) merged.insert(merged.end(), f.begin(), f.end());
  std::sort(merged.begin(), merged.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  VerificationSummary summary{max_r, max_a, mode, total, {}};
  for (auto& [g, terms] : merged) summary.mismatches.push_back(std::move(terms));
  return summary;
}

struct ResolutionNode {
  Int p, q;
  bool smooth;  // q == 1
  std::vector<ResolutionNode> children;
};

struct ResolutionTrace {
  ResolutionNode root;
  int depth;      // blowup rounds until every chart is smooth
  bool complete;  // false when the step cap cut the tree
};

namespace detail {

inline ResolutionNode resolution_node(const Int& p, const Int& q, int remaining, int& depth,
                                      bool& complete) {
  ResolutionNode node{p, q, q == 1, {}};
  depth = 0;
  if (node.smooth) return node;
  if (remaining == 0) {
    complete = false;
    return node;
  }
  ContinuedFraction cf = hj_expand(p, q);
  for (int i : newton_vertices(cf).indices) {
    LocalizationCone loc = localization_cone(cf, i);
    NormalForm nf = normal_form(Cone2(loc.gen1, loc.gen2));
    int child_depth = 0;
    node.children.push_back(resolution_node(nf.p, nf.q, remaining - 1, child_depth, complete));
    depth = std::max(depth, child_depth);
  }
  depth += 1;
  return node;
}

}  // namespace detail

/// Repeatedly replaces every non-smooth normalized chart by its normal form
/// until all leaves are smooth or max_steps rounds have been spent.
inline ResolutionTrace iterate_normalized(const Int& p, const Int& q, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  if (q < 1 || p < 0 || p >= q) throw std::invalid_argument("not in normal-form range");
  if (gcd(p, q) != 1) throw std::invalid_argument("not in lowest terms");
  bool complete = true;
  int depth = 0;
  ResolutionNode root = detail::resolution_node(p, q, max_steps, depth, complete);
  return {std::move(root), depth, complete};
}

inline ResolutionTrace iterate_normalized_cone(const Cone2& cone, int max_steps) {
  NormalForm nf = normal_form(cone);
  return iterate_normalized(nf.p, nf.q, max_steps);
}

}  // namespace nashtoric
