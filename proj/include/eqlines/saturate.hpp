#pragma once

// Saturated-set search: enumerate normalized positive definite bases of a
// given rank and angle, collect every line at angle alpha to the whole basis,
// and take a maximum clique of the compatibility graph.
//
// Working assumption: every rank-r equiangular set contains r independent
// lines, and switching one of them to the root gives one of the seeds below.

#include <optional>
#include <string>
#include <vector>

#include "eqlines/bounds.hpp"
#include "eqlines/canonical.hpp"
#include "eqlines/seidel.hpp"

namespace eqlines {

/// Normalized basis: vertex 0 is the root with inner product +alpha to all
/// others, and `graph` (order r-1) is the Seidel graph of the rest.
struct BasisSeed {
  size_t r = 0;
  QuadExt alpha;
  Graph graph;

  SymMatrix<QuadExt> gram() const;
  /// Seidel matrix of the whole basis (root isolated).
  SeidelMatrix seidel() const;
};

BasisSeed make_seed(const QuadExt& alpha, const Graph& rest);

struct SeedEnumeration {
  size_t classes_scanned = 0;
  std::vector<BasisSeed> seeds;
};

/// One seed per isomorphism class of (r-1)-vertex graphs whose Gram matrix is
/// positive definite. r <= 11.
SeedEnumeration enumerate_pd_bases(size_t r, const QuadExt& alpha, const std::string& cache_dir = default_cache_dir());

struct CandidateLine {
  std::vector<int> signs;       // <x, b_i> = alpha * signs[i]; signs[0] = +1
  std::vector<QuadExt> coords;  // x = sum coords[i] b_i
};

/// Exact reference path: solves G c = alpha * eps for every eps with
/// eps_0 = +1 and keeps unit solutions.
std::vector<CandidateLine> candidates(const BasisSeed& seed);

/// Edge iff the two candidates have inner product +-alpha.
Graph compatibility_graph(const BasisSeed& seed, const std::vector<CandidateLine>& cands);

struct SaturationReport {
  BasisSeed seed;
  size_t candidate_count = 0;
  size_t clique_size = 0;
  size_t total = 0;
  /// Sign vectors of the clique members, in candidate order.
  std::vector<std::vector<int>> clique_witness;
  /// No candidate outside the clique is compatible with all of it.
  bool maximal = false;
  /// Basis followed by the clique, re-verified (PSD, rank r).
  EquiangularSet realized;
};

/// Integer fast path for one seed. Returns std::nullopt when the seed Gram is
/// not positive definite.
std::optional<SaturationReport> saturate_seed(const BasisSeed& seed);

struct MAlphaResult {
  size_t r = 0;
  QuadExt alpha;
  size_t classes_scanned = 0;
  size_t pd_seeds = 0;
  size_t best = 0;
  /// total for each positive definite seed, in class order.
  std::vector<size_t> totals;
  /// Reports for every seed reaching `best` (for every seed with all_seeds).
  std::vector<SaturationReport> reports;
};

MAlphaResult m_alpha_search(size_t r, const QuadExt& alpha, bool all_seeds = false,
                            const std::string& cache_dir = default_cache_dir());
BoundReport m_alpha(size_t r, const QuadExt& alpha, const std::string& cache_dir = default_cache_dir());

/// Maximum over all angles for rank r, with an audit of how each angle was
/// checked or excluded.
BoundReport m_star(size_t r, const std::string& cache_dir = default_cache_dir());

/// op with apply_switch(a, op) == b, when a and b lie in the same switching
/// class up to relabelling. Throws structure_error on a size mismatch.
std::optional<SwitchingOp> switching_equivalence(const SeidelMatrix& a, const SeidelMatrix& b);

struct UniquenessReport {
  std::vector<SaturationReport> maxima;
  bool equivalent = false;
  SwitchingOp witness;
};

/// The 14-line maxima at rank 8 and angle 1/3 form one switching class.
UniquenessReport uniqueness_check_8_third(const std::string& cache_dir = default_cache_dir());

}  // namespace eqlines
