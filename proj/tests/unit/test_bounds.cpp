#include "doctest.h"

#include <set>

#include "eqlines/bounds.hpp"
#include "oracles.hpp"

using namespace eqlines;

TEST_CASE("coexistence bound follows the closed form for n = 2..8") {
  for (long n = 2; n <= 8; ++n) {
    const BoundReport rep = pillar_coexistence_bound(n);
    REQUIRE(rep.value.has_value());
    const long closed = n <= 3 ? 2 * n * n * (n + 1) : n * n * (n + 1) * (n + 1) / 2;
    CHECK(*rep.value == closed);
  }
}

TEST_CASE("coexistence check on explicit counts") {
  // The Gram [[I, v1, v2], [v1^T, 1, 0], [v2^T, 0, 1]] is PSD iff
  // I_2 - [v_i . v_j] is; build that 2x2 directly for n = 2.
  const long n = 2;
  const Rational plus(1, n * (n + 1)), minus(-1, n + 1);
  for (long l11 = 0; l11 <= 6; ++l11) {
    for (long l12 = 0; l12 <= 6; ++l12) {
      for (long l21 = 0; l21 <= 6; ++l21) {
        for (long l22 = 0; l22 <= 3; ++l22) {
          // v1 is plus on l11, l12 and minus on l21, l22; v2 is plus on l11, l21
          const Rational a = Rational(l11 + l12) * plus * plus + Rational(l21 + l22) * minus * minus;
          const Rational b = Rational(l11 + l21) * plus * plus + Rational(l12 + l22) * minus * minus;
          const Rational c = Rational(l11) * plus * plus + Rational(l12 + l21) * plus * minus +
                             Rational(l22) * minus * minus;
          const Rational m11 = Rational(1) - a, m22 = Rational(1) - b, m12 = -c;
          const bool psd = m11.sign() >= 0 && m22.sign() >= 0 && (m11 * m22 - m12 * m12).sign() >= 0;
          REQUIRE(coexistence_check(n, {l11, l12, l21, l22}).feasible == psd);
        }
      }
    }
  }
}

TEST_CASE("two (3,1) pillar caps") {
  const auto caps = per_variable_caps();
  CHECK(caps == std::array<long, 5>{9, 7, 7, 9, 39});
  CHECK(single_variable_cap(0b1111) == 39);
  CHECK(single_variable_cap(0b0000) == 9);
  CHECK(degree_class_cap(1).cap == 16);
  CHECK(degree_class_cap(2).cap == 13);
  CHECK(degree_class_cap(3).cap == 16);
  CHECK(degree_class_cap(1).assignments == 4096);
  // the matrix is PSD at the maximizers and the cap is tight
  for (int w = 1; w <= 3; ++w) {
    const auto d = degree_class_cap(w);
    REQUIRE_FALSE(d.maximizers.empty());
    for (const auto& t : d.maximizers) {
      long s = 0;
      for (int b = 0; b < 16; ++b) s += t[static_cast<size_t>(b)];
      CHECK(s == d.cap);
      CHECK(two_pillar_feasible(t));
    }
  }
}

TEST_CASE("table of caps peaks at 54") {
  const auto rows = table2({16, 13, 16});
  long best = 0;
  for (const auto& r : rows) best = std::max(best, r.bound);
  CHECK(best == 54);
  CHECK(rows.front().t1111 == 0);
}

TEST_CASE("aggregate bounds at angle 1/5") {
  for (long r : {6L, 23L, 100L, 159L, 160L, 200L}) {
    CHECK(*k3_bound(r).value == std::max(165L, r + 6));
  }
  for (long r : {23L, 195L, 196L, 300L, 1000L}) {
    CHECK(*k5_bound(r).value == std::max(272L, 4 * r / 3 + 12));
  }
  CHECK(*k5_bound(300).value == 412);
  CHECK(*k4_bound(30, 26).value == 100 + 3 * 26);
  CHECK_FALSE(k4_bound(30).value.has_value());
}

TEST_CASE("Gerzon, Welch and relative bounds") {
  for (long r = 1; r <= 30; ++r) CHECK(gerzon_bound(r) == r * (r + 1) / 2);
  CHECK(welch_bound(276, 23) == Rational(1, 25));
  CHECK(welch_bound(18, 9) == Rational(1, 17));
  // floor(r (1 - a^2) / (1 - r a^2)) evaluated with plain rationals
  for (long r = 2; r <= 40; ++r) {
    for (long k : {3L, 5L, 7L, 9L}) {
      if (r >= k * k) continue;
      const Rational a2(1, k * k);
      const Rational v = Rational(r) * (Rational(1) - a2) / (Rational(1) - Rational(r) * a2);
      CHECK(relative_bound(r, QuadExt(Rational(1, k))) == v.floor());
    }
  }
  CHECK(relative_bound(9, QuadExt(Rational(1, 7))) == 10);
  CHECK_THROWS(relative_bound(9, QuadExt(Rational(1, 3))));
}

TEST_CASE("irrational eigenvalue patterns for 14 lines in rank 8") {
  const std::set<std::pair<long, long>> listed = {
      {-2, -7}, {-2, -6}, {-2, -5}, {-2, -4}, {-2, -2}, {-2, -1}, {-1, -13}, {-1, -11}, {-1, -10},
      {-1, -9}, {-1, -8}, {-1, -7}, {-1, -5}, {-1, -4}, {-1, -3}, {-1, -1}, {0, -15}, {0, -14},
      {0, -13}, {0, -12}, {0, -11}, {0, -10}, {0, -8},  {0, -7},  {0, -6},  {0, -5},  {0, -3},
      {0, -2},  {1, -13}, {1, -11}, {1, -10}, {1, -9},  {1, -8},  {1, -7},  {1, -5},  {1, -4},
      {1, -3},  {1, -1},  {2, -7},  {2, -6},  {2, -5},  {2, -4},  {2, -2},  {2, -1}};
  REQUIRE(listed.size() == 44);
  const auto cands = neumann_candidates();
  const auto pairs = neumann_pairs(cands);
  CHECK(std::set<std::pair<long, long>>(pairs.begin(), pairs.end()) == listed);
  // each pattern meets both trace identities
  for (const auto& c : cands) {
    CHECK(6 * c.c1 + c.c3 == 0);
    CHECK(6 * (c.c1 * c.c1 - 2 * c.c2) + (c.c3 * c.c3 - 2 * c.c4) == 182);
    CHECK(poly_eval(IntPolynomial({c.c2, -c.c1, 1}), c.a).is_zero());
    CHECK(c.a.sign() < 0);
  }
  // the angle (2 sqrt 2 - 1)/7 has -1/alpha = -1 - 2 sqrt 2, a root of x^2 + 2x - 7
  const QuadExt alpha(Rational(-1, 7), Rational(2, 7), 2);
  bool found = false;
  for (const auto& c : cands) found = found || c.a == -alpha.inverse();
  CHECK(found);
}

TEST_CASE("angle restriction beyond 2r - 2") {
  CHECK_FALSE(neumann_restriction(8, 14).applies);
  const auto odd = neumann_restriction(9, 17);
  CHECK(odd.applies);
  CHECK(odd.inverse_sqrt_allowed);
  CHECK(odd.conference_order == 18);
  const auto even = neumann_restriction(10, 19);
  CHECK(even.applies);
  CHECK_FALSE(even.inverse_sqrt_allowed);
}

TEST_CASE("(5,2) pillar rank bound") {
  Graph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK_THROWS_AS(pillar52_rank_bound(tri), bound_error);
  // a 6-cycle: one singular component
  Graph c6(6);
  for (size_t i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  const auto rep = pillar52_rank_bound(c6);
  CHECK(rep.ell == 1);
  CHECK(rep.d == 6);
  // star K_{1,4} has spectral radius 2 and K_{1,5} exceeds it
  Graph star(6);
  for (size_t i = 1; i < 6; ++i) star.add_edge(0, i);
  CHECK_THROWS_AS(pillar52_rank_bound(star), bound_error);
}
