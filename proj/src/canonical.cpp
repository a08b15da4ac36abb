#include "eqlines/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace eqlines {

namespace {

constexpr size_t kMax = 64;

struct Partition {
  std::array<uint64_t, kMax> cells{};
  size_t count = 0;
};

inline uint64_t bit(size_t v) { return uint64_t{1} << v; }

class Canonizer {
 public:
  Canonizer(const uint64_t* rows, size_t n) : n_(n) {
    std::copy(rows, rows + n, rows_.begin());
    for (size_t u = 0; u < n; ++u) {
      twins_[u] = 0;
      for (size_t v = 0; v < n; ++v) {
        if (u != v && (rows_[u] & ~bit(v)) == (rows_[v] & ~bit(u))) twins_[u] |= bit(v);
      }
    }
  }

  void run() {
    Partition p;
    if (n_ > 0) {
      p.cells[0] = n_ == 64 ? ~uint64_t{0} : bit(n_) - 1;
      p.count = 1;
    }
    search(p);
  }

  const std::array<uint64_t, kMax>& best_rows() const { return best_; }
  const std::array<size_t, kMax>& best_perm() const { return best_perm_; }

 private:
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t ci = 0; ci < p.count && !changed; ++ci) {
        const uint64_t cell = p.cells[ci];
        if (__builtin_popcountll(cell) == 1) continue;
        // Signature of v: neighbour counts in every cell, compared lexicographically.
        std::array<size_t, kMax> members;
        size_t m = 0;
        for (uint64_t c = cell; c; c &= c - 1) members[m++] = static_cast<size_t>(__builtin_ctzll(c));
        std::array<std::array<uint8_t, kMax>, kMax> sig;
        for (size_t k = 0; k < m; ++k) {
          for (size_t j = 0; j < p.count; ++j) {
            sig[k][j] = static_cast<uint8_t>(__builtin_popcountll(rows_[members[k]] & p.cells[j]));
          }
        }
        auto less = [&](size_t a, size_t b) {
          for (size_t j = 0; j < p.count; ++j) {
            if (sig[a][j] != sig[b][j]) return sig[a][j] < sig[b][j];
          }
          return false;
        };
        std::array<size_t, kMax> idx;
        for (size_t k = 0; k < m; ++k) idx[k] = k;
        std::stable_sort(idx.begin(), idx.begin() + static_cast<long>(m), less);
        std::array<uint64_t, kMax> parts;
        std::fill(parts.begin(), parts.begin() + static_cast<long>(m), 0);
        size_t np = 0;
        for (size_t k = 0; k < m; ++k) {
          if (k > 0 && less(idx[k - 1], idx[k])) ++np;
          parts[np] |= bit(members[idx[k]]);
        }
        ++np;
        if (np == 1) continue;
        for (size_t j = p.count; j-- > ci + 1;) p.cells[j + np - 1] = p.cells[j];
        for (size_t k = 0; k < np; ++k) p.cells[ci + k] = parts[k];
        p.count += np - 1;
        changed = true;
      }
    }
  }

  void search(Partition p) {
    refine(p);
    if (p.count == n_) {
      leaf(p);
      return;
    }
    size_t target = 0;
    while (__builtin_popcountll(p.cells[target]) == 1) ++target;
    const uint64_t cell = p.cells[target];
    uint64_t tried = 0;
    for (uint64_t c = cell; c; c &= c - 1) {
      const size_t v = static_cast<size_t>(__builtin_ctzll(c));
      // Swapping v with an already tried twin in the same cell is an
      // automorphism fixing the partition, so its subtree is equivalent.
      if (twins_[v] & tried) continue;
      tried |= bit(v);
      Partition q;
      q.count = p.count + 1;
      for (size_t j = 0; j < target; ++j) q.cells[j] = p.cells[j];
      q.cells[target] = bit(v);
      q.cells[target + 1] = cell & ~bit(v);
      for (size_t j = target + 1; j < p.count; ++j) q.cells[j + 1] = p.cells[j];
      search(q);
    }
  }

  void leaf(const Partition& p) {
    std::array<size_t, kMax> perm{};
    for (size_t k = 0; k < n_; ++k) perm[static_cast<size_t>(__builtin_ctzll(p.cells[k]))] = k;
    std::array<uint64_t, kMax> code{};
    for (size_t v = 0; v < n_; ++v) {
      uint64_t r = 0;
      for (uint64_t c = rows_[v]; c; c &= c - 1) r |= bit(perm[static_cast<size_t>(__builtin_ctzll(c))]);
      code[perm[v]] = r;
    }
    if (!have_best_ || std::lexicographical_compare(code.begin(), code.begin() + static_cast<long>(n_),
                                                     best_.begin(), best_.begin() + static_cast<long>(n_))) {
      best_ = code;
      best_perm_ = perm;
      have_best_ = true;
    }
  }

  size_t n_;
  std::array<uint64_t, kMax> rows_{};
  std::array<uint64_t, kMax> twins_{};
  std::array<uint64_t, kMax> best_{};
  std::array<size_t, kMax> best_perm_{};
  bool have_best_ = false;
};

std::vector<uint64_t> rows_of(const Graph& g) {
  if (g.order() > kMax) throw std::invalid_argument("canonical labelling supports at most 64 vertices");
  std::vector<uint64_t> rows(g.order());
  for (size_t v = 0; v < g.order(); ++v) rows[v] = g.order() == 0 ? 0 : g.row(v)[0];
  return rows;
}

uint64_t canonical_code_rows(const uint64_t* rows, size_t n) {
  Canonizer c(rows, n);
  c.run();
  std::vector<uint64_t> best(c.best_rows().begin(), c.best_rows().begin() + static_cast<long>(n));
  return pack_graph(best, n);
}

std::string cache_file(const std::string& dir, size_t n) {
  return (std::filesystem::path(dir) / ("graph_classes_" + std::to_string(n) + ".txt")).string();
}

bool load_cache(const std::string& dir, size_t n, std::vector<uint64_t>& out) {
  if (dir.empty()) return false;
  std::ifstream in(cache_file(dir, n));
  if (!in) return false;
  std::string header;
  size_t count = 0;
  if (!(in >> header >> count) || header != "classes") return false;
  out.clear();
  out.reserve(count);
  std::string tok;
  while (in >> tok) out.push_back(std::stoull(tok, nullptr, 16));
  if (out.size() != count || !std::is_sorted(out.begin(), out.end())) {
    out.clear();
    return false;
  }
  return true;
}

void store_cache(const std::string& dir, size_t n, const std::vector<uint64_t>& codes) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string path = cache_file(dir, n);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "classes " << codes.size() << "\n";
    for (uint64_t c : codes) out << std::hex << c << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const auto rows = rows_of(g);
  Canonizer c(rows.data(), rows.size());
  c.run();
  CanonicalForm f;
  f.rows.assign(c.best_rows().begin(), c.best_rows().begin() + static_cast<long>(rows.size()));
  f.perm.assign(c.best_perm().begin(), c.best_perm().begin() + static_cast<long>(rows.size()));
  return f;
}

uint64_t pack_graph(const std::vector<uint64_t>& rows, size_t n) {
  if (n > 11) throw std::invalid_argument("packed codes support at most 11 vertices");
  uint64_t code = 0;
  size_t k = 0;
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = 0; i < j; ++i, ++k) {
      if ((rows[i] >> j) & 1U) code |= uint64_t{1} << k;
    }
  }
  return code;
}

Graph unpack_graph(uint64_t code, size_t n) {
  Graph g(n);
  size_t k = 0;
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = 0; i < j; ++i, ++k) {
      if ((code >> k) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

uint64_t canonical_code(const Graph& g) {
  const auto rows = rows_of(g);
  return canonical_code_rows(rows.data(), rows.size());
}

std::optional<std::vector<size_t>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return std::nullopt;
  const CanonicalForm cg = canonical_form(g);
  const CanonicalForm ch = canonical_form(h);
  if (cg.rows != ch.rows) return std::nullopt;
  std::vector<size_t> inv_h(h.order());
  for (size_t v = 0; v < h.order(); ++v) inv_h[ch.perm[v]] = v;
  std::vector<size_t> phi(g.order());
  for (size_t v = 0; v < g.order(); ++v) phi[v] = inv_h[cg.perm[v]];
  return phi;
}

std::string default_cache_dir() {
  const char* env = std::getenv("EQLINES_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

std::vector<uint64_t> graph_classes(size_t n, const std::string& cache_dir) {
  if (n < 1 || n > 10) throw std::invalid_argument("graph_classes supports 1..10 vertices");
  std::vector<uint64_t> level{0};
  size_t k = 1;
  // Resume from the largest cached level not exceeding n.
  for (size_t m = n; m >= 2 && !cache_dir.empty(); --m) {
    std::vector<uint64_t> cached;
    if (load_cache(cache_dir, m, cached)) {
      level.swap(cached);
      k = m;
      break;
    }
  }
  std::array<uint64_t, kMax> rows{};
  for (; k < n; ++k) {
    std::unordered_set<uint64_t> next;
    next.reserve(level.size() * 8);
    for (uint64_t code : level) {
      const Graph base = unpack_graph(code, k);
      for (size_t v = 0; v < k; ++v) rows[v] = base.row(v)[0];
      for (uint64_t nb = 0; nb < (uint64_t{1} << k); ++nb) {
        for (size_t v = 0; v < k; ++v) {
          rows[v] = (rows[v] & ~bit(k)) | (((nb >> v) & 1U) << k);
        }
        rows[k] = nb;
        next.insert(canonical_code_rows(rows.data(), k + 1));
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    if (k + 1 >= 5) store_cache(cache_dir, k + 1, level);
  }
  return level;
}

}  // namespace eqlines
