#include "eqlines/pillars.hpp"

#include <algorithm>

#include "eqlines/linalg.hpp"

namespace eqlines {

KBase make_kbase(const EquiangularSet& e, const std::vector<size_t>& vertices, const std::vector<int>& signs) {
  const size_t k = vertices.size();
  if (signs.size() != k) throw structure_error("base signs and vertices differ in length");
  if (k < 2) throw structure_error("a K-base needs at least two vectors");
  if (k > base_size_cap(e.alpha())) throw structure_error("K exceeds 1/alpha + 1");
  for (size_t i = 0; i < k; ++i) {
    if (vertices[i] >= e.size()) throw structure_error("base vertex out of range");
    if (signs[i] != 1 && signs[i] != -1) throw structure_error("base signs must be +1 or -1");
    for (size_t j = i + 1; j < k; ++j) {
      if (vertices[i] == vertices[j]) throw structure_error("repeated base vertex");
      if (signs[i] * signs[j] * e.seidel()(vertices[i], vertices[j]) != -1) {
        throw structure_error("base vectors " + std::to_string(vertices[i]) + " and " + std::to_string(vertices[j]) +
                              " do not have inner product -alpha");
      }
    }
  }
  return KBase{e.alpha(), vertices, signs};
}

KBase make_kbase(const EquiangularSet& e) {
  const BaseSizeResult b = base_size(e);
  std::vector<int> signs;
  for (size_t v : b.base) signs.push_back(b.op.flipped(v) ? -1 : 1);
  return make_kbase(e, b.base, signs);
}

size_t SignVector::plus() const { return static_cast<size_t>(std::count(eps.begin(), eps.end(), 1)); }

std::string SignVector::key() const {
  std::string s;
  for (int x : eps) s.push_back(x > 0 ? '+' : '-');
  return s;
}

SignVector sign_vector(const EquiangularSet& e, const KBase& base, size_t x, TieRule rule) {
  if (x >= e.size()) throw structure_error("vertex out of range");
  if (std::find(base.vertices.begin(), base.vertices.end(), x) != base.vertices.end()) {
    throw structure_error("sign vectors are defined for vectors outside the base");
  }
  SignVector s;
  const size_t k = base.K();
  for (size_t i = 0; i < k; ++i) s.eps.push_back(base.signs[i] * e.seidel()(x, base.vertices[i]));
  const size_t plus = s.plus();
  const int last = s.eps.back();
  const bool tie = 2 * plus == k;
  s.flipped = 2 * plus > k || (tie && (rule == TieRule::minus_last ? last > 0 : last < 0));
  if (s.flipped) {
    for (int& v : s.eps) v = -v;
  }
  return s;
}

size_t PillarDecomposition::plus_count(const std::string& key) {
  return static_cast<size_t>(std::count(key.begin(), key.end(), '+'));
}

int PillarDecomposition::normalized_sign(const EquiangularSet& e, size_t x, size_t y) const {
  return applied_signs.at(x) * applied_signs.at(y) * e.seidel()(x, y);
}

Graph PillarDecomposition::pillar_graph(const EquiangularSet& e, const std::string& key) const {
  const auto it = pillars.find(key);
  if (it == pillars.end()) throw structure_error("no pillar with key " + key);
  const auto& vs = it->second;
  Graph g(vs.size());
  for (size_t a = 0; a < vs.size(); ++a) {
    for (size_t b = a + 1; b < vs.size(); ++b) {
      if (normalized_sign(e, vs[a], vs[b]) < 0) g.add_edge(a, b);
    }
  }
  return g;
}

PillarDecomposition decompose(const EquiangularSet& e, const KBase& base, TieRule rule) {
  PillarDecomposition d;
  d.base = base;
  d.rule = rule;
  d.applied_signs.assign(e.size(), 1);
  std::vector<char> in_base(e.size(), 0);
  for (size_t i = 0; i < base.K(); ++i) {
    in_base[base.vertices[i]] = 1;
    d.applied_signs[base.vertices[i]] = base.signs[i];
  }
  for (size_t x = 0; x < e.size(); ++x) {
    if (in_base[x]) continue;
    const SignVector s = sign_vector(e, base, x, rule);
    d.applied_signs[x] = s.flipped ? -1 : 1;
    d.pillars[s.key()].push_back(x);
  }
  return d;
}

PillarGeometry pillar_geometry(size_t K, const QuadExt& alpha, const std::vector<int>& eps1,
                               const std::vector<int>& eps2) {
  if (eps1.size() != K || eps2.size() != K) throw structure_error("sign vectors must have length K");
  PillarGeometry g;
  g.K = K;
  g.alpha = alpha;
  g.eps1 = eps1;
  g.eps2 = eps2;
  // Base Gram (1+alpha)I - alpha J; coefficients solve G c = alpha eps.
  const auto [ia, ib] = aI_bJ_inverse(QuadExt(1) + alpha, -alpha, static_cast<long>(K));
  auto coeffs = [&](const std::vector<int>& eps) {
    QuadExt sum(0);
    for (int v : eps) sum += QuadExt(v);
    std::vector<QuadExt> c;
    for (int v : eps) c.push_back(alpha * (ia * QuadExt(v) + ib * sum));
    return c;
  };
  g.h_coeffs = coeffs(eps1);
  const auto h2 = coeffs(eps2);
  // <h, p_i> = alpha eps_i, so <h1, h> = alpha * eps^T coeffs.
  auto dot = [&](const std::vector<int>& eps, const std::vector<QuadExt>& c) {
    QuadExt s(0);
    for (size_t i = 0; i < K; ++i) s += QuadExt(eps[i]) * c[i];
    return alpha * s;
  };
  g.h_norm_sq = dot(eps1, g.h_coeffs);
  g.c_norm_sq = QuadExt(1) - g.h_norm_sq;
  if (g.c_norm_sq.is_zero()) throw structure_error("pillar vectors lie in the base span");
  g.same_pillar_c_inner = (alpha - g.h_norm_sq) / g.c_norm_sq;
  g.cross_h_inner = dot(eps1, h2);
  g.cross_c_inner_plus = (alpha - g.cross_h_inner) / g.c_norm_sq;
  g.cross_c_inner_minus = (-alpha - g.cross_h_inner) / g.c_norm_sq;
  return g;
}

K1Geometry k1_geometry(long n) {
  if (n < 2) throw structure_error("k1_geometry needs n >= 2");
  K1Geometry out;
  out.n = n;
  out.K = static_cast<size_t>(n + 2);
  std::vector<int> e1(out.K, -1);
  std::vector<int> e2(out.K, -1);
  e1[0] = 1;
  e2[1] = 1;
  out.geometry = pillar_geometry(out.K, QuadExt(Rational(1, 2 * n + 1)), e1, e2);
  return out;
}

PillarGeometry k3_geometry() { return pillar_geometry(3, QuadExt(Rational(1, 5)), {1, -1, -1}, {-1, 1, -1}); }

}  // namespace eqlines
