#pragma once

// Explicit equiangular systems: the 276 lines from the Witt design, Paley
// conference matrices and their tight frames, simplices, and the 3l x 3l
// block family.

#include <array>
#include <string>
#include <vector>

#include "eqlines/golay.hpp"
#include "eqlines/linalg.hpp"
#include "eqlines/pillars.hpp"
#include "eqlines/seidel.hpp"

namespace eqlines {

class fixture_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The six octads through point 1 used as the base, as printed.
std::array<PointSet, 6> witt_sigmas();

struct WittSystem {
  std::vector<PointSet> octads_all;        // in printed labels, sorted
  std::vector<PointSet> octads_through_1;  // sorted
  std::array<int, 25> relabel{};           // printed label -> generated label
  /// Integer vectors in Z^24: first the 253 w_sigma, then v_2..v_24.
  std::vector<std::array<int, 24>> vectors;
  /// Which octad (or -k for v_k) each vector came from.
  std::vector<long> origin;
  long norm_sq = 0;  // common squared norm (80)
  EquiangularSet lines;
  /// Indices of w_{sigma_1..6} among the vectors.
  std::array<size_t, 6> base_index{};
};

WittSystem witt276();
const WittSystem& witt276_cached();

/// p_i = +w_{sigma_i} for i = 1,2,3 and -w_{sigma_i} for i = 4,5,6; the other
/// vectors are oriented to have inner product +1/5 with p_6.
PillarDecomposition witt276_base_and_pillars(const WittSystem& w);

/// Symmetric conference matrix stored through its Seidel pattern.
struct ConferenceMatrix {
  SeidelMatrix b;
  size_t order() const { return b.order(); }
};

/// Checks B^2 = (order-1) I and order = 2 mod 4.
bool is_conference(const SeidelMatrix& b);

/// Order q+1 matrix from quadratic residues mod a prime q = 1 mod 4.
ConferenceMatrix paley_conference(long q);

/// G = I - (1/sqrt(order-1)) B.
EquiangularSet conference_etf(const ConferenceMatrix& c);

/// K vectors with Gram (1+alpha)I - alpha J.
EquiangularSet simplex_base(size_t K, const QuadExt& alpha);

/// 3l x 3l matrix: diagonal blocks 1 / -5/13, off-diagonal blocks (1/13) J.
SymMatrix<Rational> block_52_family(size_t ell);

/// Unit vectors with angle 1/5 whose Gram is (2/15)J + (13/15)M, M the block
/// matrix above; their Seidel graph is l disjoint triangles.
EquiangularSet block52_equiangular(size_t ell);

}  // namespace eqlines
