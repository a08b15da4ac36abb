#pragma once

// Simple undirected graphs on bitset rows, graph6 text, and exact maximum
// clique search.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eqlines {

class Graph {
 public:
  Graph() = default;
  explicit Graph(size_t n);

  size_t order() const { return n_; }
  size_t words() const { return w_; }
  const uint64_t* row(size_t v) const { return bits_.data() + v * w_; }

  bool has_edge(size_t u, size_t v) const { return (row(u)[v >> 6] >> (v & 63)) & 1U; }
  void set_edge(size_t u, size_t v, bool on);
  void add_edge(size_t u, size_t v) { set_edge(u, v, true); }
  void remove_edge(size_t u, size_t v) { set_edge(u, v, false); }

  size_t degree(size_t v) const;
  size_t edge_count() const;
  std::vector<size_t> neighbours(size_t v) const;

  Graph complement() const;
  Graph induced(const std::vector<size_t>& vertices) const;
  bool is_clique(const std::vector<size_t>& vertices) const;
  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<size_t>> components() const;

  std::string to_graph6() const;
  static Graph from_graph6(std::string_view text);

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  size_t n_ = 0;
  size_t w_ = 0;
  std::vector<uint64_t> bits_;
};

struct CliqueResult {
  size_t size = 0;
  /// Lexicographically smallest maximum clique, sorted.
  std::vector<size_t> witness;
};

/// Exact maximum clique. The witness is the lexicographically smallest
/// clique among all maximum ones, independent of internal search order.
CliqueResult max_clique(const Graph& g);

/// Clique number, stopping early once a clique of size `limit` is found.
size_t clique_number(const Graph& g, size_t limit = SIZE_MAX);

/// True if g has a clique of at least k vertices.
bool has_clique(const Graph& g, size_t k);

}  // namespace eqlines
