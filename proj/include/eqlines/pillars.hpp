#pragma once

// Pillar decomposition relative to a K-base, and the exact h/c geometry of
// pillar vectors.

#include <map>
#include <string>
#include <vector>

#include "eqlines/exactnum.hpp"
#include "eqlines/seidel.hpp"

namespace eqlines {

/// p_i = signs[i] * x_{vertices[i]}; the p_i have pairwise inner product -alpha.
struct KBase {
  QuadExt alpha;
  std::vector<size_t> vertices;
  std::vector<int> signs;

  size_t K() const { return vertices.size(); }
};

/// Validates 2 <= K <= 1/alpha + 1 and the -alpha pattern.
KBase make_kbase(const EquiangularSet& e, const std::vector<size_t>& vertices, const std::vector<int>& signs);
/// Base taken from the base_size witness.
KBase make_kbase(const EquiangularSet& e);

/// How a vector with as many plus as minus entries is oriented.
/// minus_last: flip when <x, p_K> = +alpha, so ties end with epsilon_K = -1.
/// plus_last: the opposite orientation, ties end with epsilon_K = +1.
enum class TieRule { minus_last, plus_last };

struct SignVector {
  std::vector<int> eps;
  /// True when x was replaced by -x.
  bool flipped = false;

  size_t plus() const;
  std::string key() const;  // "+--" style
};

SignVector sign_vector(const EquiangularSet& e, const KBase& base, size_t x, TieRule rule = TieRule::minus_last);

struct PillarDecomposition {
  KBase base;
  TieRule rule = TieRule::minus_last;
  /// Key -> sorted vertices of E outside the base.
  std::map<std::string, std::vector<size_t>> pillars;
  /// Per vertex of E: the sign applied (base signs for base vertices).
  std::vector<int> applied_signs;

  /// Number of '+' in a key.
  static size_t plus_count(const std::string& key);
  /// Seidel graph of one pillar after the applied signs, vertices in key order.
  Graph pillar_graph(const EquiangularSet& e, const std::string& key) const;
  /// Normalized inner product sign between two vertices (+1 or -1).
  int normalized_sign(const EquiangularSet& e, size_t x, size_t y) const;
};

PillarDecomposition decompose(const EquiangularSet& e, const KBase& base, TieRule rule = TieRule::minus_last);

/// Split x = h + c for pillar vectors with sign vectors eps1 and eps2
/// relative to a K-base of angle alpha.
struct PillarGeometry {
  size_t K = 0;
  QuadExt alpha;
  std::vector<int> eps1;
  std::vector<int> eps2;
  std::vector<QuadExt> h_coeffs;  // h = sum h_coeffs[i] p_i for eps1
  QuadExt h_norm_sq;
  QuadExt c_norm_sq;
  /// <c1^, c2^> for two vectors of the eps1 pillar (their inner product is +alpha).
  QuadExt same_pillar_c_inner;
  /// <h1, h2> across the eps1 and eps2 pillars.
  QuadExt cross_h_inner;
  /// <c1^, c2^> across pillars for <x, y> = +alpha and -alpha.
  QuadExt cross_c_inner_plus;
  QuadExt cross_c_inner_minus;
};

PillarGeometry pillar_geometry(size_t K, const QuadExt& alpha, const std::vector<int>& eps1,
                               const std::vector<int>& eps2);

/// (K,1) pillars with K = n + 2 and alpha = 1/(2n+1); n >= 2.
struct K1Geometry {
  size_t K = 0;
  long n = 0;
  PillarGeometry geometry;
};

K1Geometry k1_geometry(long n);

/// alpha = 1/5, K = 3 with eps = (+,-,-) against (-,+,-).
PillarGeometry k3_geometry();

}  // namespace eqlines
