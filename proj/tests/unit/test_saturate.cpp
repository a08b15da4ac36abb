#include "doctest.h"

#include <algorithm>
#include <random>

#include "eqlines/saturate.hpp"
#include "oracles.hpp"

using namespace eqlines;

namespace {

// Compares the integer fast path with the exact reference path on every seed.
void compare_paths(size_t r, const QuadExt& alpha) {
  const SeedEnumeration en = enumerate_pd_bases(r, alpha, "");
  REQUIRE_FALSE(en.seeds.empty());
  for (const BasisSeed& seed : en.seeds) {
    const auto fast = saturate_seed(seed);
    REQUIRE(fast.has_value());
    const auto cands = candidates(seed);
    REQUIRE(fast->candidate_count == cands.size());
    const Graph g = compatibility_graph(seed, cands);
    if (g.order() <= 16) REQUIRE(fast->clique_size == oracle::clique_number_brute(g));
    REQUIRE(fast->clique_size == max_clique(g).size);
    REQUIRE(fast->total == r + fast->clique_size);
    REQUIRE(fast->realized.size() == fast->total);
    REQUIRE(fast->realized.rank() == r);
    // every candidate is a unit vector at angle alpha to each basis vector
    const auto gram = seed.gram();
    for (const auto& c : cands) {
      QuadExt norm(0);
      for (size_t i = 0; i < r; ++i) {
        QuadExt row(0);
        for (size_t j = 0; j < r; ++j) row += gram(i, j) * c.coords[j];
        REQUIRE(row == alpha * QuadExt(c.signs[i]));
        norm += c.coords[i] * row;
      }
      REQUIRE(norm == QuadExt(1));
    }
  }
}

}  // namespace

TEST_CASE("seed enumeration counts graph classes") {
  const auto en = enumerate_pd_bases(8, QuadExt(Rational(1, 3)), "");
  CHECK(en.classes_scanned == 1044);
  CHECK(en.seeds.size() == 3);
  std::vector<std::string> names;
  for (const auto& s : en.seeds) names.push_back(s.graph.to_graph6());
  CHECK(names == std::vector<std::string>{"F????", "F???G", "F??Fw"});
}

TEST_CASE("fast path agrees with the exact reference path") {
  compare_paths(5, QuadExt(Rational(1, 3)));
  compare_paths(6, QuadExt(Rational(1, 3)));
  compare_paths(6, QuadExt(Rational(1, 5)));
  compare_paths(8, QuadExt(Rational(1, 3)));
  compare_paths(5, QuadExt::inverse_sqrt(5));
  compare_paths(5, QuadExt(Rational(-1, 7), Rational(2, 7), 2));
}

TEST_CASE("saturation at rank 8, angle 1/3") {
  const MAlphaResult res = m_alpha_search(8, QuadExt(Rational(1, 3)), true, "");
  CHECK(res.classes_scanned == 1044);
  CHECK(res.pd_seeds == 3);
  CHECK(res.best == 14);
  CHECK(res.totals == std::vector<size_t>{8, 14, 14});
  for (const auto& rep : res.reports) {
    CHECK(rep.maximal);
    CHECK(rep.realized.rank() == 8);
  }
}

TEST_CASE("the two 14-line maxima are switching equivalent") {
  const UniquenessReport u = uniqueness_check_8_third("");
  REQUIRE(u.maxima.size() == 2);
  CHECK(u.equivalent);
  CHECK(apply_switch(u.maxima[0].realized.seidel(), u.witness) == u.maxima[1].realized.seidel());
}

TEST_CASE("switching equivalence on random inputs") {
  std::mt19937_64 rng(44);
  for (int it = 0; it < 100; ++it) {
    const size_t n = 3 + static_cast<size_t>(it % 10);
    const SeidelMatrix a(oracle::random_graph(n, 0.5, rng));
    SwitchingOp op;
    std::bernoulli_distribution coin(0.5);
    for (size_t v = 0; v < n; ++v) {
      if (coin(rng)) op.flips.push_back(v);
    }
    op.perm.resize(n);
    for (size_t v = 0; v < n; ++v) op.perm[v] = v;
    std::shuffle(op.perm.begin(), op.perm.end(), rng);
    const SeidelMatrix b = apply_switch(a, op);
    const auto found = switching_equivalence(a, b);
    REQUIRE(found.has_value());
    REQUIRE(apply_switch(a, *found) == b);
    // a graph with a different spectrum is not equivalent
    Graph g = a.graph();
    g.set_edge(0, 1, !g.has_edge(0, 1));
    const SeidelMatrix c(g);
    if (!(c.char_poly() == a.char_poly())) REQUIRE_FALSE(switching_equivalence(a, c).has_value());
  }
  CHECK_THROWS_AS(switching_equivalence(SeidelMatrix(Graph(3)), SeidelMatrix(Graph(4))), structure_error);
}
