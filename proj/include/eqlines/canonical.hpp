#pragma once

// Canonical labelling for graphs with at most 64 vertices and orderly
// enumeration of isomorphism classes of small graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqlines/graph.hpp"

namespace eqlines {

struct CanonicalForm {
  /// Rows of the relabelled adjacency matrix (bit j of row i is edge i~j).
  std::vector<uint64_t> rows;
  /// perm[old] = new label.
  std::vector<size_t> perm;
};

/// Individualization-refinement search; the canonical graph is the leaf
/// with the lexicographically smallest row sequence.
CanonicalForm canonical_form(const Graph& g);

/// Upper-triangle bit packing for graphs with at most 11 vertices.
uint64_t pack_graph(const std::vector<uint64_t>& rows, size_t n);
Graph unpack_graph(uint64_t code, size_t n);

/// Canonical packed code of g (order <= 11).
uint64_t canonical_code(const Graph& g);

/// An isomorphism phi with h = phi(g) (phi[v] is the image of v), if any.
std::optional<std::vector<size_t>> find_isomorphism(const Graph& g, const Graph& h);

/// Sorted canonical codes of all isomorphism classes of graphs on n
/// vertices (1 <= n <= 10), built by extending each class on n-1 vertices
/// by one vertex in every possible way. When cache_dir is non-empty the
/// class lists are read from / written to that directory.
std::vector<uint64_t> graph_classes(size_t n, const std::string& cache_dir = "");

/// Cache directory from the EQLINES_CACHE_DIR environment variable.
std::string default_cache_dir();

}  // namespace eqlines
