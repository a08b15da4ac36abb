#include "eqlines/constructions.hpp"

#include <algorithm>

namespace eqlines {

namespace {

using IntVec = std::array<int, 24>;

long dot(const IntVec& x, const IntVec& y) {
  long s = 0;
  for (size_t i = 0; i < 24; ++i) s += static_cast<long>(x[i]) * y[i];
  return s;
}

IntVec w_sigma(PointSet sigma) {
  IntVec v{};
  for (int i = 0; i < 24; ++i) v[i] = ((sigma >> i) & 1U) ? 3 : -1;
  v[0] = -1;  // 4 e_1 cancelled by -4 e_1
  return v;
}

IntVec v_k(int k) {
  IntVec v{};
  v.fill(-1);
  v[0] = 3;
  v[k - 1] = 7;
  return v;
}

bool is_prime(long q) {
  if (q < 2) return false;
  for (long p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

}  // namespace

std::array<PointSet, 6> witt_sigmas() {
  return {set_of({1, 2, 5, 8, 13, 15, 18, 20}), set_of({1, 2, 3, 4, 9, 10, 11, 12}),
          set_of({1, 3, 5, 7, 17, 19, 22, 24}), set_of({1, 2, 5, 8, 9, 11, 22, 24}),
          set_of({1, 2, 3, 4, 17, 18, 19, 20}), set_of({1, 3, 5, 7, 10, 12, 13, 15})};
}

WittSystem witt276() {
  if (golay_generator_hash() != kGolayGeneratorHash) throw fixture_error("Golay generator rows changed");
  const auto design = golay_octads();
  const auto sig = witt_sigmas();
  const auto f = embed_blocks(design, std::vector<PointSet>(sig.begin(), sig.end()));
  if (!f) throw fixture_error("the six base octads do not embed in the generated Witt design");

  WittSystem w;
  w.relabel = *f;
  std::array<int, 25> inv{};
  for (int p = 1; p <= 24; ++p) inv[w.relabel[p]] = p;
  for (PointSet b : design) {
    PointSet s = 0;
    for (int p : points_of(b)) s |= PointSet{1} << (inv[p] - 1);
    w.octads_all.push_back(s);
  }
  std::sort(w.octads_all.begin(), w.octads_all.end());
  for (PointSet s : w.octads_all) {
    if (s & 1U) w.octads_through_1.push_back(s);
  }
  if (w.octads_all.size() != 759 || w.octads_through_1.size() != 253) {
    throw fixture_error("unexpected octad counts");
  }

  for (size_t i = 0; i < w.octads_through_1.size(); ++i) {
    w.vectors.push_back(w_sigma(w.octads_through_1[i]));
    w.origin.push_back(static_cast<long>(i));
  }
  for (int k = 2; k <= 24; ++k) {
    w.vectors.push_back(v_k(k));
    w.origin.push_back(-k);
  }
  for (size_t i = 0; i < 6; ++i) {
    const auto it = std::lower_bound(w.octads_through_1.begin(), w.octads_through_1.end(), sig[i]);
    if (it == w.octads_through_1.end() || *it != sig[i]) throw fixture_error("base octad missing after relabelling");
    w.base_index[i] = static_cast<size_t>(it - w.octads_through_1.begin());
  }

  const size_t n = w.vectors.size();
  w.norm_sq = dot(w.vectors[0], w.vectors[0]);
  Graph g(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& x = w.vectors[i];
    if (dot(x, x) != w.norm_sq) throw fixture_error("vector " + std::to_string(i) + " has a different norm");
    if (5 * x[0] + [&] { long s = 0; for (int j = 1; j < 24; ++j) s += x[j]; return s; }() != 0) {
      throw fixture_error("vector " + std::to_string(i) + " is off the hyperplane");
    }
    for (size_t j = i + 1; j < n; ++j) {
      const long d = dot(x, w.vectors[j]);
      // Inner products must be exactly +-norm/5.
      if (5 * d == -w.norm_sq) {
        g.add_edge(i, j);
      } else if (5 * d != w.norm_sq) {
        throw fixture_error("pair (" + std::to_string(i) + "," + std::to_string(j) + ") has inner product " +
                            std::to_string(d) + "/" + std::to_string(w.norm_sq));
      }
    }
  }
  w.lines = EquiangularSet(QuadExt(Rational(1, 5)), SeidelMatrix(std::move(g)));
  return w;
}

const WittSystem& witt276_cached() {
  static const WittSystem w = witt276();
  return w;
}

PillarDecomposition witt276_base_and_pillars(const WittSystem& w) {
  std::vector<size_t> verts(w.base_index.begin(), w.base_index.end());
  const KBase base = make_kbase(w.lines, verts, {1, 1, 1, -1, -1, -1});
  return decompose(w.lines, base, TieRule::plus_last);
}

bool is_conference(const SeidelMatrix& b) {
  const size_t n = b.order();
  if (n < 2 || n % 4 != 2) return false;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      long s = 0;
      for (size_t k = 0; k < n; ++k) s += b(i, k) * b(k, j);
      if (s != (i == j ? static_cast<long>(n) - 1 : 0)) return false;
    }
  }
  return true;
}

ConferenceMatrix paley_conference(long q) {
  if (!is_prime(q) || q % 4 != 1) throw structure_error("Paley order needs a prime q = 1 mod 4, got " + std::to_string(q));
  std::vector<bool> residue(static_cast<size_t>(q), false);
  for (long x = 1; x < q; ++x) residue[static_cast<size_t>(x * x % q)] = true;
  // Vertex 0 is the point at infinity, vertex i >= 1 the field element i-1.
  const size_t n = static_cast<size_t>(q) + 1;
  Graph g(n);
  for (size_t i = 1; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const long diff = static_cast<long>(j - i) % q;
      if (!residue[static_cast<size_t>(diff)]) g.add_edge(i, j);
    }
  }
  ConferenceMatrix c{SeidelMatrix(std::move(g))};
  if (!is_conference(c.b)) throw structure_error("Paley matrix failed B^2 = qI");
  return c;
}

EquiangularSet conference_etf(const ConferenceMatrix& c) {
  if (!is_conference(c.b)) throw structure_error("not a symmetric conference matrix");
  // G = I - alpha B, so the Seidel matrix is -B.
  return EquiangularSet(QuadExt::inverse_sqrt(static_cast<long>(c.order()) - 1),
                        SeidelMatrix(c.b.graph().complement()));
}

EquiangularSet simplex_base(size_t K, const QuadExt& alpha) {
  if (alpha.sign() <= 0) throw structure_error("angle must be positive");
  if (K < 2 || K > base_size_cap(alpha)) {
    throw structure_error("simplex size " + std::to_string(K) + " outside [2, " + std::to_string(base_size_cap(alpha)) + "]");
  }
  Graph g(K);
  for (size_t i = 0; i < K; ++i) {
    for (size_t j = i + 1; j < K; ++j) g.add_edge(i, j);
  }
  return EquiangularSet(alpha, SeidelMatrix(std::move(g)));
}

SymMatrix<Rational> block_52_family(size_t ell) {
  if (ell == 0) throw structure_error("block family needs ell >= 1");
  SymMatrix<Rational> m(3 * ell, Rational(1, 13));
  for (size_t b = 0; b < ell; ++b) {
    for (size_t i = 0; i < 3; ++i) {
      for (size_t j = i; j < 3; ++j) m.at(3 * b + i, 3 * b + j) = i == j ? Rational(1) : Rational(-5, 13);
    }
  }
  return m;
}

EquiangularSet block52_equiangular(size_t ell) {
  if (ell == 0) throw structure_error("block family needs ell >= 1");
  Graph g(3 * ell);
  for (size_t b = 0; b < ell; ++b) {
    g.add_edge(3 * b, 3 * b + 1);
    g.add_edge(3 * b, 3 * b + 2);
    g.add_edge(3 * b + 1, 3 * b + 2);
  }
  return EquiangularSet(QuadExt(Rational(1, 5)), SeidelMatrix(std::move(g)));
}

}  // namespace eqlines
