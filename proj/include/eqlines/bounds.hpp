#pragma once

// Cardinality bounds for equiangular sets and the exact searches behind them.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqlines/exactnum.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/linalg.hpp"

namespace eqlines {

class bound_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BoundReport {
  std::string name;
  /// Integer value when the bound is numeric.
  std::optional<long long> value;
  /// Human-readable formula when the value stays symbolic.
  std::string formula;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json certificate = nlohmann::json::object();
};

nlohmann::json to_json(const BoundReport& r);

// ---- two (K,1) pillars, alpha = 1/(2n+1), K = n + 2 ----------------------

struct CoexistenceResult {
  bool feasible = false;
  SymMatrix<Rational> m;  // I - [<v_i, v_j>]
  Rational trace;
  Rational det;
};

/// ell = (l11, l12, l21, l22).
CoexistenceResult coexistence_check(long n, const std::array<long, 4>& ell);

/// Largest pillar next to a pillar with two vectors, by exact integer scan of
/// the reduced (s, t) region; the certificate is re-checked with
/// coexistence_check on (s, t, t, 0).
BoundReport pillar_coexistence_bound(long n);

// ---- two (3,1) pillars at alpha = 1/5, one of them with 4 vectors ---------

/// t[B] for B = b1 b2 b3 b4 read as the binary number b1*8 + b2*4 + b3*2 + b4.
using TwoPillarCounts = std::array<long, 16>;

/// The 4x4 matrix whose PSD-ness is necessary for the counts.
SymMatrix<Rational> two_pillar_matrix(const TwoPillarCounts& t);
bool two_pillar_feasible(const TwoPillarCounts& t);

/// Largest value of the single variable t[B] (all others zero) that keeps the
/// matrix PSD, searched over 0..limit.
long single_variable_cap(int mask, long limit = 60);

/// Caps 9, 7, 7, 9, 39 for weight classes 0..4.
std::array<long, 5> per_variable_caps();

/// Largest sum over a weight class when only that class is nonzero, found by
/// enumerating every assignment in {0..cap}^|class|. Index 1, 2, 3.
struct DegreeClassCap {
  int weight = 0;
  long cap = 0;
  std::vector<TwoPillarCounts> maximizers;
  size_t assignments = 0;
};
DegreeClassCap degree_class_cap(int weight);

struct Table2Row {
  long t1111 = 0;
  std::array<long, 4> caps{};  // m0..m3
  long bound = 0;              // M
};

/// Caps with t1111 fixed; M uses the degree-class sums passed in.
Table2Row table2_row(long t1111, const std::array<long, 3>& class_caps);
std::vector<Table2Row> table2(const std::array<long, 3>& class_caps);
/// Full computation: per-variable caps, degree-class caps and all rows.
BoundReport two_31_pillar_search(std::optional<long> t1111 = std::nullopt);

std::string table2_tsv(const std::vector<Table2Row>& rows);
/// Aligned text with consecutive rows that share caps merged.
std::string table2_text(const std::vector<Table2Row>& rows);

// ---- aggregate bounds at alpha = 1/5 --------------------------------------

BoundReport k3_bound(long r);
BoundReport k4_bound(long r, std::optional<long> s_value = std::nullopt);
BoundReport k5_bound(long r);

/// Constants quoted from earlier work.
inline constexpr long kLemmensSeidelY = 276;
inline constexpr long kLemmensSeidelYOneMissing = 222;
inline constexpr long kLemmensSeidelYThreeClique = 258;
inline constexpr long kX51Cap = 15;
/// A (4,1) pillar next to a (4,2) pillar.
inline constexpr long kK41NextTo42 = 39;
/// Stated without computation for a (4,1) pillar next to two nonempty ones.
inline constexpr long kK41Unverified = 25;

struct Pillar52Report {
  std::vector<std::vector<size_t>> components;
  size_t ell = 0;
  size_t m = 0;
  size_t d = 0;
  size_t nullity = 0;
  bool bound_ok = false;
};

/// g: Seidel graph of a putative (5,2) pillar. Throws bound_error on a
/// 3-clique or on a component with spectral radius above 2.
Pillar52Report pillar52_rank_bound(const Graph& g);

// ---- angle restrictions and small bounds ----------------------------------

struct NeumannRestriction {
  bool applies = false;           // count > 2r - 2
  bool odd_integer_reciprocals = true;
  bool inverse_sqrt_allowed = false;  // alpha = 1/sqrt(2r-1)
  long conference_order = 0;           // 2r when the sqrt branch is open
  std::string description;
};
NeumannRestriction neumann_restriction(long r, long count);

struct NeumannCandidate {
  long c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  long delta = 0;
  QuadExt a;       // negative root of x^2 - c1 x + c2
  QuadExt a_star;  // the other root
};

/// Irrational eigenvalue patterns (x^2 - c1 x + c2)^mult (x^2 - c3 x + c4)
/// for a Seidel matrix of the given size; defaults to 14 lines of rank 8.
std::vector<NeumannCandidate> neumann_candidates(long size = 14, long rank = 8);
/// Distinct (c1, c2), sorted.
std::vector<std::pair<long, long>> neumann_pairs(const std::vector<NeumannCandidate>& c);

/// floor(r(1 - a^2)/(1 - r a^2)); requires r a^2 < 1.
long relative_bound(long r, const QuadExt& alpha);
long gerzon_bound(long r);
/// (M - r)/(r(M - 1)), the squared lower bound on the angle.
Rational welch_bound(long M, long r);

}  // namespace eqlines
