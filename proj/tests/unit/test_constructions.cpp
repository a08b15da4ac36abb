#include "doctest.h"

#include <map>

#include "eqlines/constructions.hpp"
#include "eqlines/golay.hpp"
#include "eqlines/pillars.hpp"
#include "oracles.hpp"

using namespace eqlines;

TEST_CASE("Golay code weights and the Steiner system") {
  CHECK(golay_generator_hash() == kGolayGeneratorHash);
  const auto words = golay_codewords();
  REQUIRE(words.size() == 4096);
  std::map<int, size_t> weights;
  for (PointSet w : words) ++weights[__builtin_popcount(w)];
  CHECK(weights == std::map<int, size_t>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
  // closed under addition
  for (size_t i = 0; i < 4096; i += 97) {
    for (size_t j = 0; j < 4096; j += 131) {
      CHECK(std::binary_search(words.begin(), words.end(), words[i] ^ words[j]));
    }
  }
  const auto octads = golay_octads();
  CHECK(octads.size() == 759);
  CHECK(steiner_coverage(octads) == 42504);
  CHECK(set_of(points_of(octads[5])) == octads[5]);
}

TEST_CASE("the printed base octads embed in the design") {
  const auto sig = witt_sigmas();
  const auto f = embed_blocks(golay_octads(), std::vector<PointSet>(sig.begin(), sig.end()));
  REQUIRE(f.has_value());
  const auto octads = golay_octads();
  for (PointSet s : sig) {
    PointSet img = 0;
    for (int p : points_of(s)) img |= PointSet{1} << ((*f)[static_cast<size_t>(p)] - 1);
    CHECK(std::binary_search(octads.begin(), octads.end(), img));
  }
}

TEST_CASE("276 lines from the Witt design") {
  const WittSystem& w = witt276_cached();
  REQUIRE(w.vectors.size() == 276);
  CHECK(w.norm_sq == 80);
  CHECK(w.octads_through_1.size() == 253);
  // recompute every inner product from the integer vectors
  size_t plus = 0, minus = 0;
  for (size_t i = 0; i < 276; ++i) {
    for (size_t j = i + 1; j < 276; ++j) {
      long d = 0;
      for (size_t k = 0; k < 24; ++k) d += static_cast<long>(w.vectors[i][k]) * w.vectors[j][k];
      REQUIRE((d == 16 || d == -16));
      REQUIRE(w.lines.seidel()(i, j) == (d > 0 ? 1 : -1));
      (d > 0 ? plus : minus) += 1;
    }
  }
  CHECK(plus + minus == 37950);
  CHECK(w.lines.rank() == 23);
  // regular two-graph: every pair lies in the same number of odd triples
  const SeidelMatrix& a = w.lines.seidel();
  std::vector<long> row_sums;
  const SeidelMatrix s = switching_normalize(a, 0);
  for (size_t v = 1; v < 276; ++v) {
    long t = 0;
    for (size_t u = 1; u < 276; ++u) t += u == v ? 0 : s(u, v);
    row_sums.push_back(t);
  }
  // descendant graph at a vertex is strongly regular; in particular regular
  CHECK(std::all_of(row_sums.begin(), row_sums.end(), [&](long x) { return x == row_sums.front(); }));
}

TEST_CASE("pillars of the 276-line system") {
  const WittSystem& w = witt276_cached();
  const PillarDecomposition d = witt276_base_and_pillars(w);
  CHECK(d.base.K() == 6);
  CHECK(d.pillars.size() == 10);
  for (const auto& [key, members] : d.pillars) {
    CHECK(members.size() == 27);
    CHECK(PillarDecomposition::plus_count(key) == 3);
    CHECK(key.back() == '+');
    const Graph g = d.pillar_graph(w.lines, key);
    const auto comps = g.components();
    CHECK(comps.size() == 9);
    for (const auto& c : comps) {
      REQUIRE(c.size() == 3);
      REQUIRE(g.is_clique(c));
      // each triangle with the base vectors it meets at -1/5 makes six lines
      // with pairwise inner product -1/5
      std::vector<size_t> six;
      for (size_t v : c) six.push_back(members[v]);
      for (size_t i = 0; i < 5; ++i) {
        if (key[i] == '-') six.push_back(d.base.vertices[i]);
      }
      REQUIRE(six.size() == 6);
      for (size_t x = 0; x < 6; ++x) {
        for (size_t y = x + 1; y < 6; ++y) REQUIRE(d.normalized_sign(w.lines, six[x], six[y]) == -1);
      }
    }
  }
  // every non-base vector has inner product +1/5 with p_6
  for (const auto& [key, members] : d.pillars) {
    for (size_t x : members) CHECK(d.normalized_sign(w.lines, x, d.base.vertices[5]) == 1);
  }
  CHECK(base_size(w.lines).K == 6);
}

TEST_CASE("pillar geometry from an explicit solve") {
  for (size_t K : {3UL, 4UL, 6UL}) {
    for (long den : {5L, 7L}) {
      if (K >= static_cast<size_t>(den) + 1) continue;  // singular base Gram
      const Rational alpha(1, den);
      std::vector<int> e1(K, -1), e2(K, -1);
      e1[0] = 1;
      e2[1] = 1;
      e1[K - 1] = 1;
      e2[K - 1] = 1;
      std::vector<std::vector<Rational>> g(K, std::vector<Rational>(K, -alpha));
      for (size_t i = 0; i < K; ++i) g[i][i] = Rational(1);
      auto rhs = [&](const std::vector<int>& e) {
        std::vector<Rational> b;
        for (int v : e) b.push_back(alpha * Rational(v));
        return b;
      };
      const auto c1 = oracle::solve_small(g, rhs(e1));
      const auto c2 = oracle::solve_small(g, rhs(e2));
      Rational h11(0), h12(0);
      for (size_t i = 0; i < K; ++i) {
        h11 += c1[i] * alpha * Rational(e1[i]);
        h12 += c1[i] * alpha * Rational(e2[i]);
      }
      const PillarGeometry pg = pillar_geometry(K, QuadExt(alpha), e1, e2);
      for (size_t i = 0; i < K; ++i) CHECK(pg.h_coeffs[i] == QuadExt(c1[i]));
      CHECK(pg.h_norm_sq == QuadExt(h11));
      CHECK(pg.cross_h_inner == QuadExt(h12));
      CHECK(pg.same_pillar_c_inner == QuadExt((alpha - h11) / (Rational(1) - h11)));
    }
  }
}

TEST_CASE("(K,1) and (3,1) pillar values") {
  for (long n = 2; n <= 6; ++n) {
    const auto k1 = k1_geometry(n);
    CHECK(k1.K == static_cast<size_t>(n + 2));
    CHECK(k1.geometry.h_norm_sq == QuadExt(Rational(1, 2 * n + 1)));
    CHECK(k1.geometry.same_pillar_c_inner.is_zero());
    CHECK(k1.geometry.cross_h_inner == QuadExt(Rational(n - 1, (n + 1) * (2 * n + 1))));
    CHECK(k1.geometry.cross_c_inner_plus == QuadExt(Rational(1, n * (n + 1))));
    CHECK(k1.geometry.cross_c_inner_minus == QuadExt(Rational(-1, n + 1)));
  }
  const PillarGeometry g = k3_geometry();
  CHECK(g.h_coeffs[0] == QuadExt(Rational(1, 9)));
  CHECK(g.h_coeffs[1] == QuadExt(Rational(-2, 9)));
  CHECK(g.h_norm_sq == QuadExt(Rational(1, 9)));
  CHECK(g.c_norm_sq == QuadExt(Rational(8, 9)));
  CHECK(g.same_pillar_c_inner == QuadExt(Rational(1, 10)));
  CHECK(g.cross_h_inner == QuadExt(Rational(-1, 45)));
  CHECK(g.cross_c_inner_plus == QuadExt(Rational(1, 4)));
  CHECK(g.cross_c_inner_minus == QuadExt(Rational(-1, 5)));
}

TEST_CASE("sign vectors and tie rules") {
  const auto e = simplex_base(4, QuadExt(Rational(1, 5)));
  CHECK(e.rank() == 4);
  CHECK(base_size(e).K == 4);
  CHECK_THROWS(simplex_base(7, QuadExt(Rational(1, 5))));
  // a set with a 3-base and one extra vector
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  const EquiangularSet four(QuadExt(Rational(1, 5)), SeidelMatrix(g));
  const KBase b = make_kbase(four, {0, 1, 2}, {1, 1, 1});
  const SignVector s = sign_vector(four, b, 3);
  CHECK(s.key() == "+--");
  CHECK(s.flipped);
  CHECK_THROWS_AS(make_kbase(four, {0, 1, 3}, {1, 1, 1}), structure_error);
  Graph h(5);
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = i + 1; j < 4; ++j) h.add_edge(i, j);
  }
  h.add_edge(4, 0);
  h.add_edge(4, 1);
  const EquiangularSet five(QuadExt(Rational(1, 5)), SeidelMatrix(h));
  const KBase b4 = make_kbase(five, {0, 1, 2, 3}, {1, 1, 1, 1});
  CHECK(sign_vector(five, b4, 4, TieRule::minus_last).key() == "++--");
  CHECK(sign_vector(five, b4, 4, TieRule::plus_last).key() == "--++");
}

TEST_CASE("Paley conference matrices") {
  for (long q : {5L, 13L, 17L, 29L}) {
    const ConferenceMatrix c = paley_conference(q);
    REQUIRE(c.order() == static_cast<size_t>(q + 1));
    REQUIRE(c.order() % 4 == 2);
    // B^2 = q I by direct multiplication
    const size_t n = c.order();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        long s = 0;
        for (size_t k = 0; k < n; ++k) s += c.b(i, k) * c.b(k, j);
        REQUIRE(s == (i == j ? q : 0));
      }
    }
    CHECK(is_conference(c.b));
    const EquiangularSet etf = conference_etf(c);
    CHECK(etf.rank() == n / 2);
  }
  CHECK_THROWS(paley_conference(7));
  CHECK_THROWS(paley_conference(21));
}

TEST_CASE("3l x 3l block family") {
  for (size_t ell = 1; ell <= 6; ++ell) {
    const auto m = block_52_family(ell);
    const auto e = block52_equiangular(ell);
    REQUIRE(e.size() == 3 * ell);
    const auto g = e.gram();
    for (size_t i = 0; i < 3 * ell; ++i) {
      for (size_t j = 0; j < 3 * ell; ++j) {
        CHECK(g(i, j) == QuadExt(Rational(2, 15) + Rational(13, 15) * m(i, j)));
      }
    }
    const auto comps = e.seidel().graph().components();
    CHECK(comps.size() == ell);
    for (const auto& c : comps) CHECK((c.size() == 3 && e.seidel().graph().is_clique(c)));
    CHECK(e.rank() == 2 * ell + 1);
  }
}
