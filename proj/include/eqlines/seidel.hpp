#pragma once

// Seidel matrices, equiangular sets, switching, and base size.
//
// Convention: G = I + alpha*A, and i ~ j in the Seidel graph exactly when
// A[i][j] = -1, i.e. when the inner product is -alpha.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqlines/exactnum.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/linalg.hpp"
#include "eqlines/polynomial.hpp"

namespace eqlines {

class structure_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SeidelMatrix {
 public:
  SeidelMatrix() = default;
  /// Entry -1 on the edges of g, +1 on non-edges, 0 on the diagonal.
  explicit SeidelMatrix(Graph g) : g_(std::move(g)) {}
  /// Validates zero diagonal, +-1 off-diagonal and symmetry.
  static SeidelMatrix from_rows(const std::vector<std::vector<int>>& rows);

  size_t order() const { return g_.order(); }
  int operator()(size_t i, size_t j) const { return i == j ? 0 : (g_.has_edge(i, j) ? -1 : 1); }
  const Graph& graph() const { return g_; }

  std::vector<std::vector<int>> rows() const;
  SymMatrix<mpz_class> integer_matrix() const;
  IntPolynomial char_poly() const;

  friend bool operator==(const SeidelMatrix& a, const SeidelMatrix& b) { return a.g_ == b.g_; }

 private:
  Graph g_;
};

/// y[perm[i]] = (i in flips ? -1 : 1) * x[i].
struct SwitchingOp {
  std::vector<size_t> flips;  // sorted vertex subset
  std::vector<size_t> perm;   // empty means identity

  static SwitchingOp identity() { return {}; }
  bool flipped(size_t v) const;
  size_t image(size_t v) const { return perm.empty() ? v : perm[v]; }
  SwitchingOp inverse(size_t n) const;
};

SeidelMatrix apply_switch(const SeidelMatrix& a, const SwitchingOp& op);

/// Unit vectors with pairwise inner products +-alpha. The Gram matrix
/// I + alpha*A is checked to be positive semidefinite on construction.
class EquiangularSet {
 public:
  /// Empty set.
  EquiangularSet() = default;
  EquiangularSet(QuadExt alpha, SeidelMatrix seidel);

  const QuadExt& alpha() const { return alpha_; }
  const SeidelMatrix& seidel() const { return a_; }
  size_t size() const { return a_.order(); }
  size_t rank() const { return rank_; }
  QuadExt inner(size_t i, size_t j) const;
  SymMatrix<QuadExt> gram() const;

  friend bool operator==(const EquiangularSet& x, const EquiangularSet& y) {
    return x.alpha_ == y.alpha_ && x.a_ == y.a_;
  }

 private:
  QuadExt alpha_;
  SeidelMatrix a_;
  size_t rank_ = 0;
};

/// I + alpha*A
SymMatrix<QuadExt> gram_matrix(const QuadExt& alpha, const SeidelMatrix& a);

Graph seidel_graph(const EquiangularSet& e);
EquiangularSet apply_switch(const EquiangularSet& e, const SwitchingOp& op);

/// Flips making every inner product with `root` equal to +alpha.
SwitchingOp normalizing_op(const SeidelMatrix& a, size_t root);
EquiangularSet switching_normalize(const EquiangularSet& e, size_t root);
SeidelMatrix switching_normalize(const SeidelMatrix& a, size_t root);

/// floor(1/alpha) + 1
size_t base_size_cap(const QuadExt& alpha);

struct BaseSizeResult {
  size_t K = 0;
  std::vector<size_t> base;  // sorted
  SwitchingOp op;            // switch(E, op) has `base` as a K-clique
};

/// Maximum clique number over the switching class, computed as the maximum
/// over roots v of 1 + clique number of the graph normalized at v.
BaseSizeResult base_size(const EquiangularSet& e);
BaseSizeResult base_size(const SeidelMatrix& a, size_t cap);

/// Brute force over all 2^(n-1) switchings; n <= 20.
size_t base_size_exhaustive(const SeidelMatrix& a);

}  // namespace eqlines
