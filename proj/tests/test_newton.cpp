#include <doctest.h>

#include <numeric>
#include <vector>

#include "nashtoric/newton.hpp"

using namespace nashtoric;

namespace {

ContinuedFraction cf_of(std::initializer_list<long long> terms) {
  std::vector<Int> t;
  for (long long v : terms) t.push_back(v);
  return ContinuedFraction(std::move(t));
}

LatticeVector vec(long long x, long long y) { return {Int(x), Int(y)}; }

std::vector<int> all_indices(const NewtonVertexSet& vs) { return vs.indices; }

}  // namespace

TEST_CASE("log_jacobian_generators on pinned bases") {
  auto basis12 = hilbert_basis(cf_of({1, 2}));
  CHECK(log_jacobian_generators(basis12, 0).points ==
        std::set<LatticeVector>{vec(2, 1), vec(2, 2), vec(2, 3)});
  CHECK(log_jacobian_generators(basis12, 2).points ==
        std::set<LatticeVector>{vec(2, 1), vec(2, 3)});

  auto basis1242 = hilbert_basis(cf_of({1, 2, 4, 2}));
  CHECK(log_jacobian_generators(basis1242, 0).points.size() == 10);
}

TEST_CASE("log_jacobian_generators rejects bad characteristics") {
  auto basis = hilbert_basis(cf_of({1, 2}));
  CHECK_THROWS_WITH_AS(log_jacobian_generators(basis, 1), "invalid characteristic",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(log_jacobian_generators(basis, -2), "invalid characteristic",
                       std::invalid_argument);
}

TEST_CASE("newton_vertices by the term criterion") {
  CHECK(all_indices(newton_vertices(cf_of({1, 2, 4, 2}))) == std::vector<int>{1, 2, 3, 4});
  CHECK(all_indices(newton_vertices(cf_of({1, 2, 2, 2}))) == std::vector<int>{1, 4});
  CHECK(all_indices(newton_vertices(cf_of({1, 2, 3, 2}))) == std::vector<int>{1, 2, 3, 4});
  CHECK(all_indices(newton_vertices(cf_of({1, 2}))) == std::vector<int>{1, 2});
}

TEST_CASE("newton_vertices_hull on pinned data") {
  auto cf = cf_of({1, 2, 4, 2});
  Cone2 cone(vec(1, 0), vec(5, 12));
  auto verts = newton_vertices_hull(log_jacobian_generators(hilbert_basis(cf), 0), cone);
  CHECK(verts == std::set<LatticeVector>{vec(2, 1), vec(2, 3), vec(4, 9), vec(8, 19)});

  auto cf2 = cf_of({1, 2, 2, 2});
  Cone2 cone2(vec(1, 0), vec(1, 4));
  auto verts2 = newton_vertices_hull(log_jacobian_generators(hilbert_basis(cf2), 0), cone2);
  CHECK(verts2 == std::set<LatticeVector>{vec(2, 1), vec(2, 7)});

  LogJacobianGenerators single{0, {vec(3, 4)}};
  CHECK(newton_vertices_hull(single, cone) == std::set<LatticeVector>{vec(3, 4)});

  LogJacobianGenerators empty{0, {}};
  CHECK_THROWS_AS(newton_vertices_hull(empty, cone), std::invalid_argument);
}

TEST_CASE("criterion matches hull and is characteristic independent") {
  const long long chars[] = {0, 2, 3, 5, 7, 11};
  for (long long q = 2; q <= 25; ++q)
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ContinuedFraction cf = hj_expand(p, q);
      auto basis = hilbert_basis(cf);
      Cone2 cone(vec(1, 0), LatticeVector{Int(p), Int(q)});
      NewtonVertexSet criterion = newton_vertices(cf);
      std::set<LatticeVector> expected(criterion.points.begin(), criterion.points.end());
      // consecutive sums never collide
      CHECK(expected.size() == criterion.points.size());
      for (long long ch : chars) {
        auto hull = newton_vertices_hull(log_jacobian_generators(basis, ch), cone);
        CHECK(hull == expected);
      }
    }
}

TEST_CASE("localization_cone on pinned vertices") {
  auto cf = cf_of({1, 2, 4, 2});
  LocalizationCone at2 = localization_cone(cf, 2);
  CHECK(at2.gen1 == vec(0, -1));
  CHECK(at2.gen2 == vec(1, 3));
  CHECK(at2.smooth);

  LocalizationCone at1 = localization_cone(cf, 1);
  CHECK(at1.gen1 == vec(1, 0));
  CHECK(at1.gen2 == vec(0, 1));

  LocalizationCone b = localization_cone(cf_of({1, 2, 3, 2}), 2);
  CHECK(b.gen1 == vec(0, -1));
  CHECK(b.gen2 == vec(1, 4));

  CHECK_THROWS_WITH_AS(localization_cone(cf_of({1, 2, 2, 2}), 2),
                       "localization undefined at non-vertex", std::invalid_argument);
  CHECK_THROWS_AS(localization_cone(cf, 0), std::invalid_argument);
  CHECK_THROWS_AS(localization_cone(cf, 5), std::invalid_argument);
}

TEST_CASE("localization_cone_raw on pinned vertices") {
  auto cf = cf_of({1, 2, 4, 2});
  Cone2 raw2 = localization_cone_raw(cf, 2);
  CHECK(raw2.u() == vec(0, -2));
  CHECK(raw2.v() == vec(2, 6));
  Cone2 raw4 = localization_cone_raw(cf, 4);
  CHECK(raw4.u() == vec(-4, -10));
  CHECK(raw4.v() == vec(5, 12));
  Cone2 raw1 = localization_cone_raw(cf_of({1, 2}), 1);
  CHECK(raw1.u() == vec(1, 0));
  CHECK(raw1.v() == vec(0, 2));
}

TEST_CASE("parity case formulas agree with primitivized raw generators") {
  for (long long q = 2; q <= 40; ++q)
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ContinuedFraction cf = hj_expand(p, q);
      for (int i : newton_vertices(cf).indices) {
        LocalizationCone loc = localization_cone(cf, i);
        Cone2 raw = localization_cone_raw(cf, i);
        CHECK(primitive_part(raw.u()) == loc.gen1);
        CHECK(primitive_part(raw.v()) == loc.gen2);
        CHECK(det2(loc.gen1, loc.gen2) > 0);
      }
    }
}
