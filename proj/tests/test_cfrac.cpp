#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "nashtoric/cfrac.hpp"

using namespace nashtoric;

namespace {

ContinuedFraction cf_of(std::initializer_list<long long> terms) {
  std::vector<Int> t;
  for (long long v : terms) t.push_back(v);
  return ContinuedFraction(std::move(t));
}

LatticeVector vec(long long x, long long y) { return {Int(x), Int(y)}; }

// direct nested evaluation of b_1 - 1/(b_2 - 1/(...)), reduced
std::pair<Int, Int> eval_nested(const std::vector<Int>& terms) {
  Int num = terms.back(), den = 1;
  for (std::size_t k = terms.size() - 1; k-- > 0;) {
    Int next = terms[k] * num - den;
    den = num;
    num = next;
  }
  Int g = gcd(abs(num), abs(den));
  return {num / g, den / g};
}

ContinuedFraction random_cf(std::mt19937& rng, int max_r, int max_a) {
  std::uniform_int_distribution<int> rdist(2, max_r);
  std::uniform_int_distribution<int> adist(2, max_a);
  int r = rdist(rng);
  std::vector<Int> terms(static_cast<std::size_t>(r));
  terms[0] = 1;
  for (int i = 1; i < r; ++i) terms[static_cast<std::size_t>(i)] = adist(rng);
  return ContinuedFraction(std::move(terms));
}

}  // namespace

TEST_CASE("ContinuedFraction validation") {
  CHECK_THROWS_AS(cf_of({1}), std::invalid_argument);
  CHECK_THROWS_AS(cf_of({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cf_of({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cf_of({1, 2, 0}), std::invalid_argument);
  CHECK(cf_of({1, 2}).r() == 2);
}

TEST_CASE("hj_expand on pinned fractions") {
  CHECK(hj_expand(5, 12) == cf_of({1, 2, 4, 2}));
  CHECK(hj_expand(1, 2) == cf_of({1, 2}));
  CHECK(hj_expand(1, 3) == cf_of({1, 2, 2}));
}

TEST_CASE("hj_expand domain errors") {
  CHECK_THROWS_WITH_AS(hj_expand(0, 1), "cone is smooth; no continued fraction",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(hj_expand(3, 1), "cone is smooth; no continued fraction",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(hj_expand(4, 6), "not in lowest terms", std::invalid_argument);
  CHECK_THROWS_WITH_AS(hj_expand(7, 5), "not in normal-form range", std::invalid_argument);
  CHECK_THROWS_WITH_AS(hj_expand(-1, 5), "not in normal-form range", std::invalid_argument);
}

TEST_CASE("evaluate on pinned fractions") {
  CHECK(evaluate(cf_of({1, 2, 4, 2})) == Fraction{5, 12});
  CHECK(evaluate(cf_of({1, 2})) == Fraction{1, 2});
  CHECK(evaluate(cf_of({1, 2, 2, 2})) == Fraction{1, 4});
}

TEST_CASE("convergents of [1,2,4,2]") {
  ConvergentTable t = convergents(cf_of({1, 2, 4, 2}));
  const long long ps[] = {0, 1, 1, 1, 3, 5};
  for (int i = -1; i <= 4; ++i) CHECK(t.p(i) == ps[i + 1]);
  const long long qs[] = {0, 1, 2, 7, 12};
  for (int i = 0; i <= 4; ++i) CHECK(t.q(i) == qs[i]);
  CHECK(t.v(0) == vec(1, 0));
  CHECK(t.v(4) == vec(5, 12));
  CHECK_THROWS_AS(t.p(-2), std::out_of_range);
  CHECK_THROWS_AS(t.q(5), std::out_of_range);
}

TEST_CASE("convergent table identities on random fractions") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    ContinuedFraction cf = random_cf(rng, 10, 9);
    ConvergentTable t = convergents(cf);
    for (int i = 1; i <= cf.r(); ++i)
      CHECK(t.p(i - 1) * t.q(i) - t.p(i) * t.q(i - 1) == 1);
    for (int i = 1; i < cf.r(); ++i) CHECK(t.q(i) < t.q(i + 1));
    CHECK(t.p(cf.r()) > 0);
    CHECK(t.p(cf.r()) < t.q(cf.r()));
    CHECK(gcd(t.p(cf.r()), t.q(cf.r())) == 1);
  }
}

TEST_CASE("hilbert_basis on pinned fractions") {
  std::vector<LatticeVector> b = hilbert_basis(cf_of({1, 2, 4, 2}));
  std::vector<LatticeVector> expected{vec(1, 0), vec(1, 1), vec(1, 2), vec(3, 7), vec(5, 12)};
  CHECK(b == expected);
  CHECK(hilbert_basis(cf_of({1, 2})) ==
        std::vector<LatticeVector>{vec(1, 0), vec(1, 1), vec(1, 2)});
  CHECK(hilbert_basis(cf_of({1, 2, 2})) ==
        std::vector<LatticeVector>{vec(1, 0), vec(1, 1), vec(1, 2), vec(1, 3)});
}

TEST_CASE("hilbert_basis_bruteforce on pinned inputs") {
  CHECK(hilbert_basis_bruteforce(1, 2) ==
        std::set<LatticeVector>{vec(1, 0), vec(1, 1), vec(1, 2)});
  CHECK(hilbert_basis_bruteforce(0, 1) == std::set<LatticeVector>{vec(1, 0), vec(0, 1)});
  CHECK(hilbert_basis_bruteforce(5, 12) ==
        std::set<LatticeVector>{vec(1, 0), vec(1, 1), vec(1, 2), vec(3, 7), vec(5, 12)});
}

TEST_CASE("hilbert_basis matches the brute-force oracle up to q = 25") {
  for (long long q = 2; q <= 25; ++q)
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      std::vector<LatticeVector> fast = hilbert_basis(hj_expand(p, q));
      std::set<LatticeVector> as_set(fast.begin(), fast.end());
      CHECK(as_set.size() == fast.size());
      CHECK(as_set == hilbert_basis_bruteforce(p, q));
    }
}

TEST_CASE("expand/evaluate round trips") {
  for (long long q = 2; q <= 40; ++q)
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Fraction f = evaluate(hj_expand(p, q));
      CHECK(f.p == p);
      CHECK(f.q == q);
    }
  std::mt19937 rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    ContinuedFraction cf = random_cf(rng, 9, 7);
    Fraction f = evaluate(cf);
    CHECK(hj_expand(f.p, f.q) == cf);
  }
}

TEST_CASE("segment_denominator on pinned data") {
  ContinuedFraction cf = cf_of({1, 2, 4, 2});
  CHECK(segment_denominator(cf, 1, 3) == 4);
  CHECK_THROWS_AS(segment_denominator(cf, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(segment_denominator(cf, -1, 2), std::out_of_range);
  CHECK_THROWS_AS(segment_denominator(cf, 1, 5), std::out_of_range);
}

TEST_CASE("segment_denominator equals the nested-evaluation denominator") {
  std::mt19937 rng(505);
  for (int trial = 0; trial < 120; ++trial) {
    ContinuedFraction cf = random_cf(rng, 9, 7);
    ConvergentTable t = convergents(cf);
    for (int i = 0; i < cf.r(); ++i)
      for (int j = i + 1; j <= cf.r(); ++j) {
        Int d = segment_denominator(cf, i, j);
        CHECK(d > 0);
        std::vector<Int> segment(cf.terms().begin() + i, cf.terms().begin() + j);
        auto [num, den] = eval_nested(segment);
        CHECK(d == den);
        // consecutive pair: the unit determinant; distance two: the trailing term
        if (j == i + 1) CHECK(d == 1);
        if (j == i + 2) CHECK(d == cf.a(i + 2));
      }
  }
}

TEST_CASE("q_r equals the normal-form cone index") {
  std::mt19937 rng(707);
  for (int trial = 0; trial < 50; ++trial) {
    ContinuedFraction cf = random_cf(rng, 8, 6);
    Fraction f = evaluate(cf);
    std::vector<LatticeVector> basis = hilbert_basis(cf);
    CHECK(f.q == abs(det2(primitive_part(basis.front()), primitive_part(basis.back()))));
  }
}
