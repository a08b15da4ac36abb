#include "eqlines/seidel.hpp"

#include <algorithm>

namespace eqlines {

SeidelMatrix SeidelMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const size_t n = rows.size();
  Graph g(n);
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw structure_error("seidel row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (size_t j = 0; j < n; ++j) {
      const int v = rows[i][j];
      const std::string where = "seidel entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (i == j) {
        if (v != 0) throw structure_error(where + " must be 0 on the diagonal");
        continue;
      }
      if (v != 1 && v != -1) throw structure_error(where + " must be +1 or -1");
      if (rows[j][i] != v) throw structure_error(where + " breaks symmetry");
      if (v == -1 && i < j) g.add_edge(i, j);
    }
  }
  return SeidelMatrix(std::move(g));
}

std::vector<std::vector<int>> SeidelMatrix::rows() const {
  std::vector<std::vector<int>> out(order(), std::vector<int>(order(), 0));
  for (size_t i = 0; i < order(); ++i) {
    for (size_t j = 0; j < order(); ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

SymMatrix<mpz_class> SeidelMatrix::integer_matrix() const {
  SymMatrix<mpz_class> m(order());
  for (size_t i = 0; i < order(); ++i) {
    for (size_t j = i; j < order(); ++j) m.at(i, j) = (*this)(i, j);
  }
  return m;
}

IntPolynomial SeidelMatrix::char_poly() const { return eqlines::char_poly(integer_matrix()); }

bool SwitchingOp::flipped(size_t v) const { return std::binary_search(flips.begin(), flips.end(), v); }

SwitchingOp SwitchingOp::inverse(size_t n) const {
  SwitchingOp inv;
  if (!perm.empty()) {
    inv.perm.assign(n, 0);
    for (size_t i = 0; i < n; ++i) inv.perm[perm[i]] = i;
  }
  for (size_t v : flips) inv.flips.push_back(image(v));
  std::sort(inv.flips.begin(), inv.flips.end());
  return inv;
}

SeidelMatrix apply_switch(const SeidelMatrix& a, const SwitchingOp& op) {
  const size_t n = a.order();
  if (!op.perm.empty()) {
    if (op.perm.size() != n) throw structure_error("switching permutation has the wrong length");
    std::vector<char> hit(n, 0);
    for (size_t v : op.perm) {
      if (v >= n || hit[v]) throw structure_error("switching permutation is not a bijection");
      hit[v] = 1;
    }
  }
  std::vector<int> s(n, 1);
  for (size_t v : op.flips) {
    if (v >= n) throw structure_error("switching flip out of range");
    s[v] = -1;
  }
  Graph g(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (s[i] * s[j] * a(i, j) == -1) g.add_edge(op.image(i), op.image(j));
    }
  }
  return SeidelMatrix(std::move(g));
}

SymMatrix<QuadExt> gram_matrix(const QuadExt& alpha, const SeidelMatrix& a) {
  SymMatrix<QuadExt> g(a.order());
  const QuadExt neg = -alpha;
  for (size_t i = 0; i < a.order(); ++i) {
    g.at(i, i) = QuadExt(1);
    for (size_t j = i + 1; j < a.order(); ++j) g.at(i, j) = a(i, j) > 0 ? alpha : neg;
  }
  return g;
}

EquiangularSet::EquiangularSet(QuadExt alpha, SeidelMatrix seidel) : alpha_(std::move(alpha)), a_(std::move(seidel)) {
  if (alpha_.sign() <= 0 || (alpha_ - QuadExt(1)).sign() >= 0) {
    throw structure_error("angle " + alpha_.to_string() + " is not in (0,1)");
  }
  const auto cert = psd_check(gram_matrix(alpha_, a_));
  if (!cert.psd()) {
    std::string w;
    for (size_t i = 0; i < cert.witness.size(); ++i) {
      if (!cert.witness[i].is_zero()) w += (w.empty() ? "" : ", ") + std::to_string(i) + ":" + cert.witness[i].to_string();
    }
    throw structure_error("Gram matrix is not positive semidefinite; x^T G x = " + cert.witness_value.to_string() +
                          " for x = {" + w + "}");
  }
  rank_ = cert.rank;
}

QuadExt EquiangularSet::inner(size_t i, size_t j) const {
  if (i == j) return QuadExt(1);
  return a_(i, j) > 0 ? alpha_ : -alpha_;
}

SymMatrix<QuadExt> EquiangularSet::gram() const { return gram_matrix(alpha_, a_); }

Graph seidel_graph(const EquiangularSet& e) { return e.seidel().graph(); }

EquiangularSet apply_switch(const EquiangularSet& e, const SwitchingOp& op) {
  return EquiangularSet(e.alpha(), apply_switch(e.seidel(), op));
}

SwitchingOp normalizing_op(const SeidelMatrix& a, size_t root) {
  if (root >= a.order()) throw structure_error("root out of range");
  SwitchingOp op;
  for (size_t v = 0; v < a.order(); ++v) {
    if (v != root && a(root, v) < 0) op.flips.push_back(v);
  }
  return op;
}

SeidelMatrix switching_normalize(const SeidelMatrix& a, size_t root) { return apply_switch(a, normalizing_op(a, root)); }

EquiangularSet switching_normalize(const EquiangularSet& e, size_t root) {
  return EquiangularSet(e.alpha(), switching_normalize(e.seidel(), root));
}

size_t base_size_cap(const QuadExt& alpha) {
  const mpz_class f = alpha.inverse().floor();
  return static_cast<size_t>(f.get_ui()) + 1;
}

namespace {

// Graph on the vertices other than v after switching so that v has +alpha
// with everyone; labels[k] is the original vertex of new vertex k.
Graph rooted_graph(const SeidelMatrix& a, size_t v, std::vector<size_t>& labels) {
  labels.clear();
  for (size_t u = 0; u < a.order(); ++u) {
    if (u != v) labels.push_back(u);
  }
  Graph g(labels.size());
  for (size_t p = 0; p < labels.size(); ++p) {
    for (size_t q = p + 1; q < labels.size(); ++q) {
      const size_t i = labels[p];
      const size_t j = labels[q];
      if (a(v, i) * a(v, j) * a(i, j) == -1) g.add_edge(p, q);
    }
  }
  return g;
}

}  // namespace

BaseSizeResult base_size(const SeidelMatrix& a, size_t cap) {
  const size_t n = a.order();
  if (n < 2) throw structure_error("base size needs at least two vectors");
  size_t best = 0;
  size_t best_root = 0;
  std::vector<size_t> labels;
  for (size_t v = 0; v < n && best < cap; ++v) {
    const Graph g = rooted_graph(a, v, labels);
    const size_t k = 1 + clique_number(g, cap - 1);
    if (k > best) {
      best = k;
      best_root = v;
    }
  }
  const Graph g = rooted_graph(a, best_root, labels);
  const CliqueResult cr = max_clique(g);
  BaseSizeResult res;
  res.K = 1 + cr.size;
  res.base.push_back(best_root);
  for (size_t p : cr.witness) res.base.push_back(labels[p]);
  std::sort(res.base.begin(), res.base.end());
  res.op = normalizing_op(a, best_root);
  res.op.flips.push_back(best_root);
  std::sort(res.op.flips.begin(), res.op.flips.end());
  return res;
}

BaseSizeResult base_size(const EquiangularSet& e) { return base_size(e.seidel(), base_size_cap(e.alpha())); }

size_t base_size_exhaustive(const SeidelMatrix& a) {
  const size_t n = a.order();
  if (n < 2) throw structure_error("base size needs at least two vectors");
  if (n > 20) throw structure_error("exhaustive base size is limited to 20 vectors");
  size_t best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask) {
    Graph g(n);
    for (size_t i = 0; i < n; ++i) {
      const int si = (i > 0 && ((mask >> (i - 1)) & 1U)) ? -1 : 1;
      for (size_t j = i + 1; j < n; ++j) {
        const int sj = ((mask >> (j - 1)) & 1U) ? -1 : 1;
        if (si * sj * a(i, j) == -1) g.add_edge(i, j);
      }
    }
    best = std::max(best, clique_number(g));
  }
  return best;
}

}  // namespace eqlines
