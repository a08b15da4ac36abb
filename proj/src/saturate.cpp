#include "eqlines/saturate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eqlines/json_io.hpp"

namespace eqlines {

using nlohmann::json;

namespace {

using i128 = __int128;

constexpr i128 kEntryLimit = static_cast<i128>(1) << 62;

void guard(i128 v) {
  if (v >= kEntryLimit || v <= -kEntryLimit) throw arithmetic_error("integer fast path overflow");
}

i128 to_i128(const mpz_class& z) {
  if (!z.fits_slong_p()) throw arithmetic_error("integer fast path overflow");
  return z.get_si();
}

// Integer description of G^{-1} for a seed. With x = eps^T P eps and
// z = eps^T Q eps, eps is a candidate iff x*cden == ca and z*cden == cb; two
// candidates are compatible iff eps^T P delta * eden == +-ea (and likewise for Q
// with eb, same sign).
struct IntInverse {
  size_t r = 0;
  std::vector<i128> P;
  std::vector<i128> Q;
  bool has_q = false;
  i128 ca = 0, cb = 0, cden = 1;
  i128 ea = 0, eb = 0, eden = 1;
};

// Fraction-free Gauss-Jordan on [N | I]. Returns false if a leading
// principal minor is not positive. On success adj holds adj(N), det = det N.
bool pd_adjugate(std::vector<i128> n, size_t r, std::vector<i128>& adj, i128& det) {
  const size_t w = 2 * r;
  std::vector<i128> m(r * w, 0);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) m[i * w + j] = n[i * r + j];
    m[i * w + r + i] = 1;
  }
  i128 prev = 1;
  for (size_t k = 0; k < r; ++k) {
    const i128 piv = m[k * w + k];
    if (piv <= 0) return false;
    for (size_t i = 0; i < r; ++i) {
      if (i == k) continue;
      const i128 f = m[i * w + k];
      for (size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        const i128 v = (piv * m[i * w + j] - f * m[k * w + j]) / prev;
        guard(v);
        m[i * w + j] = v;
      }
      m[i * w + k] = 0;
    }
    prev = piv;
  }
  det = prev;
  adj.assign(r * r, 0);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) adj[i * r + j] = m[i * w + r + j];
  }
  return true;
}

// x*den == a and z*den == b for target t scaled by D.
void set_target(const QuadExt& t, const mpz_class& D, i128& a, i128& b, i128& den) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), t.a().den().get_mpz_t(), t.b().den().get_mpz_t());
  const mpz_class ta = D * t.a().num() * (l / t.a().den());
  const mpz_class tb = D * t.b().num() * (l / t.b().den());
  a = to_i128(ta);
  b = to_i128(tb);
  den = to_i128(l);
}

std::optional<IntInverse> int_inverse(const BasisSeed& seed) {
  const size_t r = seed.r;
  IntInverse inv;
  inv.r = r;
  const SeidelMatrix s = seed.seidel();
  if (seed.alpha.is_rational()) {
    const Rational& al = seed.alpha.a();
    const i128 p = to_i128(al.num());
    const i128 q = to_i128(al.den());
    std::vector<i128> n(r * r);
    for (size_t i = 0; i < r; ++i) {
      for (size_t j = 0; j < r; ++j) n[i * r + j] = i == j ? q : p * s(i, j);
    }
    i128 det = 0;
    if (!pd_adjugate(std::move(n), r, inv.P, det)) return std::nullopt;
    // G^{-1} = q adj / det.
    inv.cden = p * p;
    inv.ca = q * det;
    inv.eden = p;
    inv.ea = det;
    return inv;
  }
  const SymMatrix<QuadExt> g = seed.gram();
  if (psd_check(g).verdict != PsdVerdict::positive_definite) return std::nullopt;
  Matrix<QuadExt> id(r, r, QuadExt(0));
  for (size_t i = 0; i < r; ++i) id(i, i) = QuadExt(1);
  const Matrix<QuadExt> h = solve(Matrix<QuadExt>(g), id);
  mpz_class D = 1;
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), h(i, j).a().den().get_mpz_t());
      mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), h(i, j).b().den().get_mpz_t());
    }
  }
  inv.P.resize(r * r);
  inv.Q.resize(r * r);
  inv.has_q = true;
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      const QuadExt& x = h(i, j);
      inv.P[i * r + j] = to_i128(D * x.a().num() / x.a().den());
      inv.Q[i * r + j] = to_i128(D * x.b().num() / x.b().den());
    }
  }
  const QuadExt inv_alpha = seed.alpha.inverse();
  set_target(inv_alpha.square(), D, inv.ca, inv.cb, inv.cden);
  set_target(inv_alpha, D, inv.ea, inv.eb, inv.eden);
  return inv;
}

struct FastCandidate {
  std::vector<int> eps;
  std::vector<i128> y;  // P eps
  std::vector<i128> z;  // Q eps
};

std::vector<FastCandidate> fast_candidates(const IntInverse& inv) {
  const size_t r = inv.r;
  std::vector<int> eps(r, 1);
  std::vector<i128> y(r, 0), z(r, 0);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      y[i] += inv.P[i * r + j];
      if (inv.has_q) z[i] += inv.Q[i * r + j];
    }
  }
  std::vector<FastCandidate> out;
  const uint64_t steps = uint64_t{1} << (r - 1);
  for (uint64_t s = 0; s < steps; ++s) {
    if (s != 0) {
      const size_t k = static_cast<size_t>(__builtin_ctzll(s)) + 1;
      const i128 d = -2 * eps[k];
      eps[k] = -eps[k];
      for (size_t i = 0; i < r; ++i) {
        y[i] += d * inv.P[i * r + k];
        if (inv.has_q) z[i] += d * inv.Q[i * r + k];
      }
    }
    i128 x = 0, zz = 0;
    for (size_t i = 0; i < r; ++i) {
      x += eps[i] * y[i];
      if (inv.has_q) zz += eps[i] * z[i];
    }
    if (x * inv.cden == inv.ca && zz * inv.cden == inv.cb) out.push_back({eps, y, z});
  }
  // Gray order is not lexicographic; sort for a stable candidate order.
  std::sort(out.begin(), out.end(), [](const FastCandidate& a, const FastCandidate& b) { return a.eps > b.eps; });
  return out;
}

// +1 / -1 for inner product +-alpha, 0 otherwise.
int fast_edge(const IntInverse& inv, const FastCandidate& a, const FastCandidate& b) {
  i128 x = 0, z = 0;
  for (size_t i = 0; i < inv.r; ++i) {
    x += a.eps[i] * b.y[i];
    if (inv.has_q) z += a.eps[i] * b.z[i];
  }
  x *= inv.eden;
  z *= inv.eden;
  if (x == inv.ea && z == inv.eb) return 1;
  if (x == -inv.ea && z == -inv.eb) return -1;
  return 0;
}

std::string angle_text(const QuadExt& a) {
  if (a.is_rational()) return a.to_string();
  const QuadExt inv2 = a.inverse().square();
  if (inv2.is_rational() && inv2.a().is_integer()) return "1/sqrt(" + inv2.a().to_string() + ")";
  return a.to_string();
}

}  // namespace

SymMatrix<QuadExt> BasisSeed::gram() const { return gram_matrix(alpha, seidel()); }

SeidelMatrix BasisSeed::seidel() const {
  Graph g(r);
  for (size_t i = 0; i + 1 < r; ++i) {
    for (size_t j = i + 1; j + 1 < r; ++j) {
      if (graph.has_edge(i, j)) g.add_edge(i + 1, j + 1);
    }
  }
  return SeidelMatrix(std::move(g));
}

BasisSeed make_seed(const QuadExt& alpha, const Graph& rest) {
  if (alpha.sign() <= 0 || (alpha - QuadExt(1)).sign() >= 0) throw structure_error("angle must lie in (0,1)");
  BasisSeed s;
  s.r = rest.order() + 1;
  s.alpha = alpha;
  s.graph = rest;
  return s;
}

SeedEnumeration enumerate_pd_bases(size_t r, const QuadExt& alpha, const std::string& cache_dir) {
  if (r < 2 || r > 11) throw structure_error("seed enumeration needs 2 <= r <= 11");
  SeedEnumeration out;
  const auto codes = graph_classes(r - 1, cache_dir);
  out.classes_scanned = codes.size();
  for (uint64_t c : codes) {
    BasisSeed s = make_seed(alpha, unpack_graph(c, r - 1));
    if (int_inverse(s)) out.seeds.push_back(std::move(s));
  }
  return out;
}

std::vector<CandidateLine> candidates(const BasisSeed& seed) {
  const size_t r = seed.r;
  const SymMatrix<QuadExt> g = seed.gram();
  if (psd_check(g).verdict != PsdVerdict::positive_definite) {
    throw structure_error("seed Gram matrix is not positive definite");
  }
  Matrix<QuadExt> id(r, r, QuadExt(0));
  for (size_t i = 0; i < r; ++i) id(i, i) = QuadExt(1);
  const Matrix<QuadExt> h = solve(Matrix<QuadExt>(g), id);
  std::vector<CandidateLine> out;
  for (uint64_t m = 0; m < (uint64_t{1} << (r - 1)); ++m) {
    std::vector<int> eps(r, 1);
    for (size_t k = 1; k < r; ++k) eps[k] = ((m >> (r - 1 - k)) & 1U) ? -1 : 1;
    std::vector<QuadExt> c(r, QuadExt(0));
    for (size_t i = 0; i < r; ++i) {
      for (size_t j = 0; j < r; ++j) c[i] += h(i, j) * QuadExt(eps[j]);
      c[i] *= seed.alpha;
    }
    if (quad_form(g, c) == QuadExt(1)) out.push_back({eps, c});
  }
  return out;
}

Graph compatibility_graph(const BasisSeed& seed, const std::vector<CandidateLine>& cands) {
  const SymMatrix<QuadExt> g = seed.gram();
  const size_t r = seed.r;
  Graph out(cands.size());
  for (size_t a = 0; a < cands.size(); ++a) {
    std::vector<QuadExt> gc(r, QuadExt(0));
    for (size_t i = 0; i < r; ++i) {
      for (size_t j = 0; j < r; ++j) gc[i] += g(i, j) * cands[a].coords[j];
    }
    for (size_t b = a + 1; b < cands.size(); ++b) {
      QuadExt ip(0);
      for (size_t i = 0; i < r; ++i) ip += gc[i] * cands[b].coords[i];
      if (ip == seed.alpha || ip == -seed.alpha) out.add_edge(a, b);
    }
  }
  return out;
}

std::optional<SaturationReport> saturate_seed(const BasisSeed& seed) {
  const auto inv = int_inverse(seed);
  if (!inv) return std::nullopt;
  const auto cands = fast_candidates(*inv);
  const size_t c = cands.size();
  Graph compat(c);
  std::vector<std::vector<int>> sign(c, std::vector<int>(c, 0));
  for (size_t a = 0; a < c; ++a) {
    for (size_t b = a + 1; b < c; ++b) {
      const int e = fast_edge(*inv, cands[a], cands[b]);
      sign[a][b] = sign[b][a] = e;
      if (e != 0) compat.add_edge(a, b);
    }
  }
  const CliqueResult cl = max_clique(compat);

  SaturationReport rep;
  rep.seed = seed;
  rep.candidate_count = c;
  rep.clique_size = cl.size;
  rep.total = seed.r + cl.size;
  for (size_t v : cl.witness) rep.clique_witness.push_back(cands[v].eps);

  rep.maximal = true;
  for (size_t v = 0; v < c && rep.maximal; ++v) {
    if (std::binary_search(cl.witness.begin(), cl.witness.end(), v)) continue;
    bool all = true;
    for (size_t u : cl.witness) all = all && compat.has_edge(u, v);
    if (all) rep.maximal = false;
  }

  const size_t r = seed.r;
  const SeidelMatrix base = seed.seidel();
  Graph g(rep.total);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = i + 1; j < r; ++j) {
      if (base(i, j) < 0) g.add_edge(i, j);
    }
  }
  for (size_t a = 0; a < cl.witness.size(); ++a) {
    const auto& eps = cands[cl.witness[a]].eps;
    for (size_t i = 0; i < r; ++i) {
      if (eps[i] < 0) g.add_edge(i, r + a);
    }
    for (size_t b = a + 1; b < cl.witness.size(); ++b) {
      if (sign[cl.witness[a]][cl.witness[b]] < 0) g.add_edge(r + a, r + b);
    }
  }
  rep.realized = EquiangularSet(seed.alpha, SeidelMatrix(std::move(g)));
  if (rep.realized.rank() != r) throw structure_error("saturated set has the wrong rank");
  return rep;
}

MAlphaResult m_alpha_search(size_t r, const QuadExt& alpha, bool all_seeds, const std::string& cache_dir) {
  if (r < 2 || r > 11) throw structure_error("saturation needs 2 <= r <= 11");
  MAlphaResult res;
  res.r = r;
  res.alpha = alpha;
  const auto codes = graph_classes(r - 1, cache_dir);
  res.classes_scanned = codes.size();
  for (uint64_t code : codes) {
    auto rep = saturate_seed(make_seed(alpha, unpack_graph(code, r - 1)));
    if (!rep) continue;
    ++res.pd_seeds;
    res.totals.push_back(rep->total);
    if (rep->total > res.best) {
      res.best = rep->total;
      if (!all_seeds) res.reports.clear();
    }
    if (all_seeds || rep->total == res.best) res.reports.push_back(std::move(*rep));
  }
  return res;
}

BoundReport m_alpha(size_t r, const QuadExt& alpha, const std::string& cache_dir) {
  const MAlphaResult res = m_alpha_search(r, alpha, false, cache_dir);
  BoundReport rep;
  rep.name = "m_alpha";
  rep.value = static_cast<long long>(res.best);
  rep.inputs = {{"rank", r}, {"alpha", angle_text(alpha)}};
  std::map<size_t, size_t> hist;
  for (size_t t : res.totals) ++hist[t];
  json h = json::object();
  for (const auto& [t, k] : hist) h[std::to_string(t)] = k;
  json maxima = json::array();
  for (const auto& s : res.reports) maxima.push_back(to_json(s));
  rep.certificate = {{"classes_scanned", res.classes_scanned},
                     {"pd_seeds", res.pd_seeds},
                     {"totals", h},
                     {"maxima", maxima}};
  return rep;
}

BoundReport m_star(size_t r, const std::string& cache_dir) {
  if (r < 4 || r > 11) throw structure_error("m_star needs 4 <= r <= 11");
  const long rr = static_cast<long>(r);
  struct Angle {
    QuadExt alpha;
    std::optional<long> bound;  // none: relative bound does not apply
  };
  std::vector<Angle> angles;
  for (long n = 1;; ++n) {
    const QuadExt a(Rational(1, 2 * n + 1));
    if ((QuadExt(rr) * a.square() - QuadExt(1)).sign() >= 0) {
      angles.push_back({a, std::nullopt});
      continue;
    }
    const long b = relative_bound(rr, a);
    if (b <= rr) break;
    angles.push_back({a, b});
  }
  const NeumannRestriction nr = neumann_restriction(rr, 2 * rr - 1);
  if (nr.inverse_sqrt_allowed) {
    const QuadExt a = QuadExt::inverse_sqrt(2 * rr - 1);
    angles.push_back({a, relative_bound(rr, a)});
  }
  std::stable_sort(angles.begin(), angles.end(), [](const Angle& x, const Angle& y) {
    if (!x.bound || !y.bound) return !x.bound && y.bound;
    return *x.bound > *y.bound;
  });

  size_t best = 0;
  std::string best_angle;
  json audit = json::array();
  for (const Angle& a : angles) {
    json row = {{"alpha", angle_text(a.alpha)},
                {"relative_bound", a.bound ? json(*a.bound) : json("not applicable")}};
    if (a.bound && static_cast<size_t>(*a.bound) <= best) {
      row["status"] = "excluded";
      row["reason"] = "relative bound " + std::to_string(*a.bound) + " <= " + std::to_string(best);
    } else {
      const MAlphaResult res = m_alpha_search(r, a.alpha, false, cache_dir);
      row["status"] = "computed";
      row["m_alpha"] = res.best;
      row["classes_scanned"] = res.classes_scanned;
      row["pd_seeds"] = res.pd_seeds;
      if (res.best > best) {
        best = res.best;
        best_angle = angle_text(a.alpha);
      }
    }
    audit.push_back(row);
  }
  const bool certified = best >= 2 * r - 2;
  BoundReport rep;
  rep.name = "m_star";
  rep.value = static_cast<long long>(best);
  rep.inputs = {{"rank", r}};
  rep.certificate = {{"angles", audit},
                     {"best_angle", best_angle},
                     {"other_angles", "at most " + std::to_string(2 * r - 2) + " lines: " + nr.description +
                                          " once there are more than 2r - 2 lines"},
                     {"certified", certified}};
  if (!certified) {
    rep.certificate["angles_not_ruled_out"] = "irrational angles other than those listed may still reach " +
                                              std::to_string(2 * r - 2);
  }
  return rep;
}

std::optional<SwitchingOp> switching_equivalence(const SeidelMatrix& a, const SeidelMatrix& b) {
  const size_t n = a.order();
  if (n != b.order()) throw structure_error("switching equivalence needs equal sizes");
  if (n == 0) return SwitchingOp::identity();
  auto rooted = [](const SeidelMatrix& s, size_t v, std::vector<size_t>& labels) {
    labels.clear();
    for (size_t u = 0; u < s.order(); ++u) {
      if (u != v) labels.push_back(u);
    }
    Graph g(labels.size());
    for (size_t p = 0; p < labels.size(); ++p) {
      for (size_t q = p + 1; q < labels.size(); ++q) {
        if (s(v, labels[p]) * s(v, labels[q]) * s(labels[p], labels[q]) == -1) g.add_edge(p, q);
      }
    }
    return g;
  };
  std::vector<size_t> lb, la;
  const Graph gb = rooted(b, 0, lb);
  const SwitchingOp fb = normalizing_op(b, 0);
  for (size_t u = 0; u < n; ++u) {
    const Graph ga = rooted(a, u, la);
    const auto phi = find_isomorphism(ga, gb);
    if (!phi) continue;
    SwitchingOp op;
    op.perm.assign(n, 0);
    op.perm[u] = 0;
    for (size_t k = 0; k < la.size(); ++k) op.perm[la[k]] = lb[(*phi)[k]];
    const SwitchingOp fa = normalizing_op(a, u);
    for (size_t i = 0; i < n; ++i) {
      if (fa.flipped(i) != fb.flipped(op.perm[i])) op.flips.push_back(i);
    }
    if (apply_switch(a, op) == b) return op;
  }
  return std::nullopt;
}

UniquenessReport uniqueness_check_8_third(const std::string& cache_dir) {
  const MAlphaResult res = m_alpha_search(8, QuadExt(Rational(1, 3)), true, cache_dir);
  UniquenessReport out;
  for (const auto& s : res.reports) {
    if (s.total == res.best) out.maxima.push_back(s);
  }
  if (out.maxima.size() < 2) {
    out.equivalent = out.maxima.size() == 1;
    return out;
  }
  out.equivalent = true;
  for (size_t i = 1; i < out.maxima.size() && out.equivalent; ++i) {
    const auto op = switching_equivalence(out.maxima[0].realized.seidel(), out.maxima[i].realized.seidel());
    if (!op) {
      out.equivalent = false;
    } else if (i == 1) {
      out.witness = *op;
    }
  }
  return out;
}

}  // namespace eqlines
