#include "eqlines/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqlines/exactnum.hpp"

namespace eqlines {

Graph::Graph(size_t n) : n_(n), w_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void Graph::set_edge(size_t u, size_t v, bool on) {
  if (u >= n_ || v >= n_) throw std::out_of_range("graph vertex out of range");
  if (u == v) throw std::invalid_argument("graphs have no loops");
  uint64_t* ru = bits_.data() + u * w_;
  uint64_t* rv = bits_.data() + v * w_;
  if (on) {
    ru[v >> 6] |= uint64_t{1} << (v & 63);
    rv[u >> 6] |= uint64_t{1} << (u & 63);
  } else {
    ru[v >> 6] &= ~(uint64_t{1} << (v & 63));
    rv[u >> 6] &= ~(uint64_t{1} << (u & 63));
  }
}

size_t Graph::degree(size_t v) const {
  size_t d = 0;
  for (size_t k = 0; k < w_; ++k) d += static_cast<size_t>(__builtin_popcountll(row(v)[k]));
  return d;
}

size_t Graph::edge_count() const {
  size_t s = 0;
  for (size_t v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

std::vector<size_t> Graph::neighbours(size_t v) const {
  std::vector<size_t> out;
  for (size_t u = 0; u < n_; ++u) {
    if (has_edge(v, u)) out.push_back(u);
  }
  return out;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (size_t u = 0; u < n_; ++u) {
    for (size_t v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

Graph Graph::induced(const std::vector<size_t>& vertices) const {
  Graph h(vertices.size());
  for (size_t a = 0; a < vertices.size(); ++a) {
    for (size_t b = a + 1; b < vertices.size(); ++b) {
      if (has_edge(vertices[a], vertices[b])) h.add_edge(a, b);
    }
  }
  return h;
}

bool Graph::is_clique(const std::vector<size_t>& vertices) const {
  for (size_t a = 0; a < vertices.size(); ++a) {
    for (size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b] || !has_edge(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

std::vector<std::vector<size_t>> Graph::components() const {
  std::vector<std::vector<size_t>> out;
  std::vector<char> seen(n_, 0);
  for (size_t s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<size_t> comp{s};
    seen[s] = 1;
    for (size_t k = 0; k < comp.size(); ++k) {
      for (size_t u = 0; u < n_; ++u) {
        if (!seen[u] && has_edge(comp[k], u)) {
          seen[u] = 1;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string Graph::to_graph6() const {
  std::string out;
  if (n_ < 63) {
    out.push_back(static_cast<char>(63 + n_));
  } else if (n_ < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n_ >> shift) & 63)));
  } else {
    throw std::invalid_argument("graph too large for graph6");
  }
  int acc = 0;
  int used = 0;
  for (size_t j = 1; j < n_; ++j) {
    for (size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

Graph Graph::from_graph6(std::string_view text) {
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw parse_error("empty graph6 string");
  auto val = [&](size_t k) {
    const int c = static_cast<unsigned char>(text[k]);
    if (c < 63 || c > 126) throw parse_error("invalid graph6 character at offset " + std::to_string(k));
    return c - 63;
  };
  size_t n = 0;
  size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<size_t>(val(0));
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw parse_error("unsupported graph6 size header");
    n = (static_cast<size_t>(val(1)) << 12) | (static_cast<size_t>(val(2)) << 6) | static_cast<size_t>(val(3));
    pos = 4;
  }
  const size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const size_t need = (bits + 5) / 6;
  if (text.size() != pos + need) throw parse_error("graph6 length mismatch for " + std::to_string(n) + " vertices");
  Graph g(n);
  size_t k = 0;
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = 0; i < j; ++i, ++k) {
      const int chunk = val(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

// Bitset branch and bound with greedy colouring bounds. Vertices are
// relabelled so that bit order follows a smallest-last degeneracy order.
class CliqueSolver {
 public:
  explicit CliqueSolver(const Graph& g) : n_(g.order()), w_((g.order() + 63) / 64) {
    std::vector<size_t> deg(n_);
    std::vector<char> gone(n_, 0);
    for (size_t v = 0; v < n_; ++v) deg[v] = g.degree(v);
    std::vector<size_t> removal;
    removal.reserve(n_);
    for (size_t step = 0; step < n_; ++step) {
      size_t best = SIZE_MAX;
      for (size_t v = 0; v < n_; ++v) {
        if (!gone[v] && (best == SIZE_MAX || deg[v] < deg[best])) best = v;
      }
      gone[best] = 1;
      removal.push_back(best);
      for (size_t u = 0; u < n_; ++u) {
        if (!gone[u] && g.has_edge(best, u)) --deg[u];
      }
    }
    order_.assign(removal.rbegin(), removal.rend());
    pos_.resize(n_);
    for (size_t k = 0; k < n_; ++k) pos_[order_[k]] = k;
    adj_.assign(n_ * w_, 0);
    for (size_t a = 0; a < n_; ++a) {
      for (size_t b = 0; b < n_; ++b) {
        if (a != b && g.has_edge(order_[a], order_[b])) adj_[a * w_ + (b >> 6)] |= uint64_t{1} << (b & 63);
      }
    }
  }

  std::vector<uint64_t> mask_of(const std::vector<char>& in) const {
    std::vector<uint64_t> m(w_, 0);
    for (size_t v = 0; v < n_; ++v) {
      if (in[v]) m[pos_[v] >> 6] |= uint64_t{1} << (pos_[v] & 63);
    }
    return m;
  }

  // Largest clique inside `cand` if it exceeds `floor`; stops at `stop`.
  size_t search(std::vector<uint64_t> cand, size_t floor, size_t stop) {
    best_ = floor;
    stop_ = stop;
    done_ = best_ >= stop_;
    cur_.clear();
    best_clique_.clear();
    if (!done_ && any(cand)) expand(cand);
    return best_;
  }

  std::vector<size_t> best_clique() const {
    std::vector<size_t> out;
    for (size_t v : best_clique_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool any(const std::vector<uint64_t>& m) const {
    for (uint64_t x : m) {
      if (x) return true;
    }
    return false;
  }

  void expand(std::vector<uint64_t>& p) {
    std::vector<size_t> verts;
    std::vector<size_t> cols;
    std::vector<uint64_t> q = p;
    std::vector<uint64_t> r(w_);
    size_t colour = 0;
    while (any(q)) {
      ++colour;
      r = q;
      for (size_t k = 0; k < w_; ++k) {
        while (r[k]) {
          const size_t v = k * 64 + static_cast<size_t>(__builtin_ctzll(r[k]));
          const uint64_t* av = adj_.data() + v * w_;
          for (size_t t = 0; t < w_; ++t) r[t] &= ~av[t];
          r[k] &= ~(uint64_t{1} << (v & 63));
          q[k] &= ~(uint64_t{1} << (v & 63));
          verts.push_back(v);
          cols.push_back(colour);
        }
      }
    }
    std::vector<uint64_t> np(w_);
    for (size_t idx = verts.size(); idx-- > 0;) {
      if (cur_.size() + cols[idx] <= best_) return;
      const size_t v = verts[idx];
      cur_.push_back(v);
      const uint64_t* av = adj_.data() + v * w_;
      bool nonempty = false;
      for (size_t t = 0; t < w_; ++t) {
        np[t] = p[t] & av[t];
        nonempty = nonempty || np[t];
      }
      if (!nonempty) {
        if (cur_.size() > best_) {
          best_ = cur_.size();
          best_clique_ = cur_;
          if (best_ >= stop_) done_ = true;
        }
      } else {
        std::vector<uint64_t> sub = np;
        expand(sub);
      }
      cur_.pop_back();
      if (done_) return;
      p[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }
  }

  size_t n_;
  size_t w_;
  std::vector<size_t> order_;
  std::vector<size_t> pos_;
  std::vector<uint64_t> adj_;
  size_t best_ = 0;
  size_t stop_ = SIZE_MAX;
  bool done_ = false;
  std::vector<size_t> cur_;
  std::vector<size_t> best_clique_;
};

}  // namespace

size_t clique_number(const Graph& g, size_t limit) {
  if (g.order() == 0) return 0;
  CliqueSolver s(g);
  return s.search(s.mask_of(std::vector<char>(g.order(), 1)), 0, limit);
}

bool has_clique(const Graph& g, size_t k) {
  if (k == 0) return true;
  if (g.order() == 0) return false;
  CliqueSolver s(g);
  return s.search(s.mask_of(std::vector<char>(g.order(), 1)), k - 1, k) >= k;
}

CliqueResult max_clique(const Graph& g) {
  CliqueResult res;
  const size_t n = g.order();
  if (n == 0) return res;
  CliqueSolver s(g);
  std::vector<char> cand(n, 1);
  const size_t omega = s.search(s.mask_of(cand), 0, SIZE_MAX);
  res.size = omega;
  // Greedy prefix decisions give the lexicographically smallest maximum clique.
  for (size_t v = 0; v < n && res.witness.size() < omega; ++v) {
    if (!cand[v]) continue;
    const size_t need = omega - res.witness.size() - 1;
    std::vector<char> sub(n, 0);
    for (size_t u = 0; u < n; ++u) sub[u] = cand[u] && g.has_edge(v, u);
    bool ok = need == 0;
    if (!ok) ok = s.search(s.mask_of(sub), need - 1, need) >= need;
    if (ok) {
      res.witness.push_back(v);
      cand = sub;
    } else {
      cand[v] = 0;
    }
  }
  return res;
}

}  // namespace eqlines
