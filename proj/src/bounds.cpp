#include "eqlines/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace eqlines {

using nlohmann::json;

json to_json(const BoundReport& r) {
  json j;
  j["name"] = r.name;
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  if (!r.formula.empty()) j["formula"] = r.formula;
  j["inputs"] = r.inputs;
  j["certificate"] = r.certificate;
  return j;
}

// ---- coexistence -----------------------------------------------------------

CoexistenceResult coexistence_check(long n, const std::array<long, 4>& ell) {
  if (n < 2) throw bound_error("coexistence needs n >= 2");
  for (long l : ell) {
    if (l < 0) throw bound_error("pillar counts must be nonnegative");
  }
  const Rational L(n * n * (n + 1) * (n + 1));
  const Rational q((n + 1) * (n + 1));
  const Rational nq(n * (n + 1) * (n + 1));
  const auto [l11, l12, l21, l22] = ell;
  const Rational v11 = Rational(l11 + l12) / L + Rational(l21 + l22) / q;
  const Rational v22 = Rational(l11 + l21) / L + Rational(l12 + l22) / q;
  const Rational v12 = Rational(l11) / L - Rational(l12 + l21) / nq + Rational(l22) / q;
  CoexistenceResult res;
  res.m = SymMatrix<Rational>(2);
  res.m.at(0, 0) = Rational(1) - v11;
  res.m.at(1, 1) = Rational(1) - v22;
  res.m.at(0, 1) = -v12;
  res.trace = res.m(0, 0) + res.m(1, 1);
  res.det = res.m(0, 0) * res.m(1, 1) - res.m(0, 1) * res.m(0, 1);
  res.feasible = res.trace.sign() >= 0 && res.det.sign() >= 0;
  return res;
}

BoundReport pillar_coexistence_bound(long n) {
  if (n < 2) throw bound_error("pillar_coexistence_bound needs n >= 2");
  const long long L = static_cast<long long>(n) * n * (n + 1) * (n + 1);
  const long long n2 = static_cast<long long>(n) * n;
  const long long nm1sq = static_cast<long long>(n - 1) * (n - 1);
  long long best = -1;
  long long best_s = 0;
  long long best_t = 0;
  long long maximizers = 0;
  long long feasible_points = 0;
  for (long long t = 0; t <= L; ++t) {
    for (long long s = 0; s <= L; ++s) {
      if (L - s - (n2 + 1) * t < 0) break;
      const __int128 c2 = static_cast<__int128>(n2 - t) * (L - 2 * s - nm1sq * t);
      if (c2 < 0) continue;
      ++feasible_points;
      const long long N = s + 2 * t;
      if (N > best) {
        best = N;
        maximizers = 0;
      }
      if (N == best) {
        // t only grows, so the last maximizer has the largest t.
        ++maximizers;
        best_s = s;
        best_t = t;
      }
    }
  }
  const auto check = coexistence_check(n, {static_cast<long>(best_s), static_cast<long>(best_t),
                                           static_cast<long>(best_t), 0});
  if (!check.feasible) throw bound_error("coexistence certificate failed re-verification");
  const long long closed = n <= 3 ? 2 * n2 * (n + 1) : n2 * (n + 1) * (n + 1) / 2;
  BoundReport r;
  r.name = "pillar_coexistence";
  r.value = best;
  r.inputs = {{"n", n}, {"alpha", Rational(1, 2 * n + 1).to_string()}, {"K", n + 2}};
  r.certificate = {{"s", best_s},
                   {"t", best_t},
                   {"ell", {best_s, best_t, best_t, 0}},
                   {"trace", check.trace.to_string()},
                   {"det", check.det.to_string()},
                   {"maximizers", maximizers},
                   {"feasible_points", feasible_points},
                   {"closed_form", closed}};
  return r;
}

// ---- two (3,1) pillars -----------------------------------------------------

namespace {

int bit_of(int mask, int i) { return (mask >> (3 - i)) & 1; }

const Rational& val(int b) {
  static const Rational quarter(1, 4);
  static const Rational minus_fifth(-1, 5);
  return b ? minus_fifth : quarter;
}

std::vector<int> masks_of_weight(int w) {
  std::vector<int> out;
  for (int m = 0; m < 16; ++m) {
    if (__builtin_popcount(static_cast<unsigned>(m)) == w) out.push_back(m);
  }
  return out;
}

std::string mask_string(int m) {
  std::string s;
  for (int i = 0; i < 4; ++i) s.push_back(bit_of(m, i) ? '1' : '0');
  return s;
}

}  // namespace

SymMatrix<Rational> two_pillar_matrix(const TwoPillarCounts& t) {
  long n = 0;
  for (long x : t) {
    if (x < 0) throw bound_error("counts must be nonnegative");
    n += x;
  }
  std::array<std::array<Rational, 4>, 4> vv;
  std::array<Rational, 4> w;
  for (int mask = 0; mask < 16; ++mask) {
    if (t[mask] == 0) continue;
    const Rational c(t[mask]);
    for (int i = 0; i < 4; ++i) {
      w[i] += c * val(bit_of(mask, i));
      for (int j = i; j < 4; ++j) vv[i][j] += c * val(bit_of(mask, i)) * val(bit_of(mask, j));
    }
  }
  const Rational ten_ninths(10, 9);
  const Rational coef = Rational(10) / Rational(9 * (9 + n));
  SymMatrix<Rational> m(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const Rational base = i == j ? Rational(1) : Rational(1, 10);
      m.at(i, j) = base - ten_ninths * vv[i][j] + coef * w[i] * w[j];
    }
  }
  return m;
}

bool two_pillar_feasible(const TwoPillarCounts& t) { return psd_check(two_pillar_matrix(t)).psd(); }

long single_variable_cap(int mask, long limit) {
  long cap = -1;
  for (long v = 0; v <= limit; ++v) {
    TwoPillarCounts t{};
    t[mask] = v;
    if (two_pillar_feasible(t)) cap = v;
  }
  return cap;
}

std::array<long, 5> per_variable_caps() {
  std::array<long, 5> caps{};
  for (int w = 0; w <= 4; ++w) {
    const auto ms = masks_of_weight(w);
    caps[w] = single_variable_cap(ms.front());
    for (int m : ms) {
      if (single_variable_cap(m) != caps[w]) throw bound_error("per-variable caps differ within a weight class");
    }
  }
  return caps;
}

DegreeClassCap degree_class_cap(int weight) {
  if (weight < 1 || weight > 3) throw bound_error("degree classes are 1, 2, 3");
  const auto ms = masks_of_weight(weight);
  const long cap = single_variable_cap(ms.front());
  DegreeClassCap res;
  res.weight = weight;
  std::vector<long> digits(ms.size(), 0);
  while (true) {
    TwoPillarCounts t{};
    long sum = 0;
    for (size_t k = 0; k < ms.size(); ++k) {
      t[ms[k]] = digits[k];
      sum += digits[k];
    }
    ++res.assignments;
    // Only sums at least the current best can matter.
    if (sum >= res.cap && two_pillar_feasible(t)) {
      if (sum > res.cap) {
        res.cap = sum;
        res.maximizers.clear();
      }
      res.maximizers.push_back(t);
    }
    size_t k = 0;
    while (k < digits.size() && digits[k] == cap) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  return res;
}

Table2Row table2_row(long t1111, const std::array<long, 3>& class_caps) {
  Table2Row row;
  row.t1111 = t1111;
  for (int w = 0; w <= 3; ++w) {
    long cap = -1;
    for (int m : masks_of_weight(w)) {
      long c = -1;
      for (long v = 0; v <= 40; ++v) {
        TwoPillarCounts t{};
        t[15] = t1111;
        t[m] = v;
        if (two_pillar_feasible(t)) c = v;
      }
      if (cap >= 0 && c != cap) throw bound_error("row caps differ within a weight class");
      cap = c;
    }
    if (cap < 0) throw bound_error("t1111 = " + std::to_string(t1111) + " is infeasible on its own");
    row.caps[w] = cap;
  }
  row.bound = row.caps[0] + std::min(4 * row.caps[1], class_caps[0]) + std::min(6 * row.caps[2], class_caps[1]) +
              std::min(4 * row.caps[3], class_caps[2]) + t1111;
  return row;
}

std::vector<Table2Row> table2(const std::array<long, 3>& class_caps) {
  const long top = single_variable_cap(15);
  std::vector<Table2Row> rows;
  for (long t = 0; t <= top; ++t) rows.push_back(table2_row(t, class_caps));
  return rows;
}

std::string table2_tsv(const std::vector<Table2Row>& rows) {
  std::ostringstream os;
  os << "t1111\tm0\tm1\tm2\tm3\tM\n";
  for (const auto& r : rows) {
    os << r.t1111 << '\t' << r.caps[0] << '\t' << r.caps[1] << '\t' << r.caps[2] << '\t' << r.caps[3] << '\t'
       << r.bound << '\n';
  }
  return os.str();
}

std::string table2_text(const std::vector<Table2Row>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "t1111" << std::setw(6) << "B4,0" << std::setw(6) << "B4,1" << std::setw(6)
     << "B4,2" << std::setw(6) << "B4,3" << "M\n";
  size_t i = 0;
  while (i < rows.size()) {
    size_t j = i;
    while (j + 1 < rows.size() && rows[j + 1].caps == rows[i].caps) ++j;
    std::string label = std::to_string(rows[i].t1111);
    std::string ms = std::to_string(rows[i].bound);
    if (j == i + 1) {
      label += ", " + std::to_string(rows[j].t1111);
      ms += ", " + std::to_string(rows[j].bound);
    } else if (j > i + 1) {
      label += "-" + std::to_string(rows[j].t1111);
      ms += "-" + std::to_string(rows[j].bound);
    }
    os << std::setw(8) << label << std::setw(6) << rows[i].caps[0] << std::setw(6) << rows[i].caps[1]
       << std::setw(6) << rows[i].caps[2] << std::setw(6) << rows[i].caps[3] << ms << '\n';
    i = j + 1;
  }
  return os.str();
}

BoundReport two_31_pillar_search(std::optional<long> t1111) {
  const auto caps = per_variable_caps();
  std::array<long, 3> class_caps{};
  json classes = json::array();
  for (int w = 1; w <= 3; ++w) {
    const auto dc = degree_class_cap(w);
    class_caps[w - 1] = dc.cap;
    json maxi = json::array();
    for (const auto& t : dc.maximizers) {
      json one = json::object();
      for (int m : masks_of_weight(w)) one[mask_string(m)] = t[m];
      maxi.push_back(one);
    }
    classes.push_back({{"weight", w}, {"cap", dc.cap}, {"assignments", dc.assignments}, {"maximizers", maxi}});
  }
  std::vector<Table2Row> rows;
  if (t1111) {
    if (*t1111 < 0 || *t1111 > caps[4]) throw bound_error("t1111 must lie in 0.." + std::to_string(caps[4]));
    rows.push_back(table2_row(*t1111, class_caps));
  } else {
    rows = table2(class_caps);
  }
  long best = 0;
  long best_t = 0;
  json table = json::array();
  for (const auto& r : rows) {
    table.push_back({{"t1111", r.t1111}, {"caps", r.caps}, {"M", r.bound}});
    if (r.bound > best) {
      best = r.bound;
      best_t = r.t1111;
    }
  }
  BoundReport rep;
  rep.name = "two_31_pillars";
  rep.value = best;
  rep.inputs = {{"alpha", "1/5"}, {"K", 3}, {"other_pillar_size", 4}};
  if (t1111) rep.inputs["t1111"] = *t1111;
  rep.certificate = {{"per_variable_caps", caps},
                     {"degree_class_caps", classes},
                     {"rows", table},
                     {"argmax_t1111", best_t}};
  return rep;
}

// ---- aggregate bounds ------------------------------------------------------

namespace {
constexpr long kTwo31PillarCap = 54;
}

BoundReport k3_bound(long r) {
  if (r < 3) throw bound_error("k3_bound needs r >= 3");
  const long two = 3 + kTwo31PillarCap * 3;
  const long one = 3 + (r - 3) + 3 + 3;
  BoundReport rep;
  rep.name = "k3";
  rep.value = std::max(two, one);
  rep.inputs = {{"rank", r}, {"alpha", "1/5"}, {"K", 3}};
  rep.certificate = {{"two_big_pillars", {{"arithmetic", "3 + 54*3"}, {"value", two}}},
                     {"one_big_pillar", {{"arithmetic", "3 + (r-3) + 3 + 3"}, {"value", one}}},
                     {"branch", two >= one ? "two_big_pillars" : "one_big_pillar"}};
  return rep;
}

BoundReport k4_bound(long r, std::optional<long> s_value) {
  if (r < 4) throw bound_error("k4_bound needs r >= 4");
  const BoundReport per = pillar_coexistence_bound(2);
  const long cap = *per.value;
  const long sector = std::max(4 * cap, r - 1);
  BoundReport rep;
  rep.name = "k4";
  rep.inputs = {{"rank", r}, {"alpha", "1/5"}, {"K", 4}};
  rep.certificate = {
      {"per_41_pillar_cap", cap},
      {"sector_41", {{"value", sector}, {"two_big_pillars", 4 * cap}, {"one_big_pillar", r - 1}}},
      {"cap_41_next_to_42", kK41NextTo42},
      {"unverified_cap_41_pillar", {{"value", kK41Unverified}, {"flagged", true}, {"applies_from_rank", 30},
                         {"note", "stated without computation; at most one other nonempty (4,1) pillar when r - 4 > 25"}}},
      {"arithmetic", "4 + 4*24 + 3*s"}};
  if (s_value) {
    if (*s_value < 0) throw bound_error("s-value must be nonnegative");
    rep.inputs["s_value"] = *s_value;
    rep.value = 4 + 4 * cap + 3 * *s_value;
    rep.formula = "100 + 3*" + std::to_string(*s_value);
    if (*s_value < r - 4) rep.certificate["warning"] = "s-value below the r-4 lower bound";
  } else {
    rep.formula = "100 + 3*s(" + std::to_string(r - 4) + ", 1/13, -5/13)";
  }
  return rep;
}

BoundReport k5_bound(long r) {
  if (r < 5) throw bound_error("k5_bound needs r >= 5");
  const long two = kLemmensSeidelYThreeClique - 1 + kX51Cap;
  // 5 + 15 + floor(4(r-6)/3) = floor(4r/3) + 12
  const long one_floor = (4 * r) / 3 + 12;
  BoundReport rep;
  rep.name = "k5";
  rep.value = std::max(two, one_floor);
  rep.inputs = {{"rank", r}, {"alpha", "1/5"}, {"K", 5}};
  rep.certificate = {{"two_52_pillars", {{"arithmetic", "258 - 1 + 15"}, {"value", two}}},
                     {"one_52_pillar", {{"arithmetic", "5 + 15 + floor(4(r-6)/3)"}, {"value", one_floor}}},
                     {"constants", {{"Y", kLemmensSeidelY}, {"Y_missing_one", kLemmensSeidelYOneMissing},
                                    {"Y_with_3_clique", kLemmensSeidelYThreeClique}, {"X51", kX51Cap}}},
                     {"branch", two >= one_floor ? "two_52_pillars" : "one_52_pillar"}};
  return rep;
}

Pillar52Report pillar52_rank_bound(const Graph& g) {
  const size_t m = g.order();
  if (m == 0) throw bound_error("empty pillar");
  const CliqueResult tri = max_clique(g);
  if (tri.size >= 3) {
    throw bound_error("pillar graph contains the 3-clique {" + std::to_string(tri.witness[0]) + "," +
                      std::to_string(tri.witness[1]) + "," + std::to_string(tri.witness[2]) + "}");
  }
  Pillar52Report rep;
  rep.m = m;
  rep.components = g.components();
  for (const auto& comp : rep.components) {
    const Graph h = g.induced(comp);
    SymMatrix<mpz_class> t(comp.size());
    for (size_t a = 0; a < comp.size(); ++a) {
      t.at(a, a) = 2;
      for (size_t b = a + 1; b < comp.size(); ++b) t.at(a, b) = h.has_edge(a, b) ? -1 : 0;
    }
    const auto cert = psd_check(t);
    if (!cert.psd()) {
      std::string names;
      for (size_t v : comp) names += (names.empty() ? "" : ",") + std::to_string(v);
      throw bound_error("component {" + names + "} has spectral radius above 2");
    }
    if (cert.verdict == PsdVerdict::positive_semidefinite_singular) ++rep.ell;
  }
  rep.nullity = rep.ell > 0 ? rep.ell - 1 : 0;
  rep.d = m - rep.nullity;
  // Independent check: rank of 5G = J + 4I - 2A.
  SymMatrix<mpz_class> five_g(m);
  for (size_t a = 0; a < m; ++a) {
    five_g.at(a, a) = 5;
    for (size_t b = a + 1; b < m; ++b) five_g.at(a, b) = g.has_edge(a, b) ? -1 : 1;
  }
  if (rank(five_g) != rep.d) throw bound_error("nullity count disagrees with the Gram rank");
  rep.bound_ok = 3 * rep.m <= 4 * (rep.d - 1) && rep.d >= 1;
  return rep;
}

// ---- angle restrictions and small bounds -----------------------------------

NeumannRestriction neumann_restriction(long r, long count) {
  NeumannRestriction res;
  if (r <= 3 || count <= 2 * r - 2) {
    res.applies = false;
    res.odd_integer_reciprocals = false;
    res.description = "no restriction: needs r > 3 and more than 2r - 2 lines";
    return res;
  }
  res.applies = true;
  res.odd_integer_reciprocals = true;
  if (r % 2 == 0) {
    res.description = "1/alpha is an odd integer";
  } else {
    res.inverse_sqrt_allowed = true;
    res.conference_order = 2 * r;
    if (res.conference_order % 4 != 2) throw bound_error("conference order is not 2 mod 4");
    res.description = "1/alpha is an odd integer or sqrt(" + std::to_string(2 * r - 1) + ")";
  }
  return res;
}

std::vector<NeumannCandidate> neumann_candidates(long size, long rank) {
  const long mult = size - rank;
  if (mult < 1 || size - 2 * mult != 2) {
    throw bound_error("neumann_candidates handles one remaining quadratic factor (size = 2*(size-rank) + 2)");
  }
  const long T = size * (size - 1);
  std::vector<NeumannCandidate> out;
  const long c1max = static_cast<long>(std::sqrt(static_cast<double>(2 * T))) + 1;
  for (long c1 = -c1max; c1 <= c1max; ++c1) {
    for (long c2 = -T; c2 <= T; ++c2) {
      const long delta = c1 * c1 - 4 * c2;
      if (delta <= 0) continue;
      const long root = static_cast<long>(std::llround(std::sqrt(static_cast<double>(delta))));
      bool square = false;
      for (long q = std::max(0L, root - 1); q <= root + 1; ++q) square = square || q * q == delta;
      if (square) continue;
      const long c3 = -mult * c1;
      const long twice_c4 = mult * (c1 * c1 - 2 * c2) + c3 * c3 - T;
      if (twice_c4 % 2 != 0) continue;
      const long c4 = twice_c4 / 2;
      if (c3 * c3 < 4 * c4) continue;
      NeumannCandidate c;
      c.c1 = c1;
      c.c2 = c2;
      c.c3 = c3;
      c.c4 = c4;
      c.delta = delta;
      c.a = QuadExt(Rational(c1, 2), Rational(-1, 2), delta);
      c.a_star = c.a.conjugate();
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::pair<long, long>> neumann_pairs(const std::vector<NeumannCandidate>& c) {
  std::vector<std::pair<long, long>> out;
  for (const auto& x : c) out.emplace_back(x.c1, x.c2);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long relative_bound(long r, const QuadExt& alpha) {
  if (r < 1) throw bound_error("rank must be positive");
  if (alpha.sign() <= 0) throw bound_error("alpha must be positive");
  const QuadExt a2 = alpha.square();
  const QuadExt denom = QuadExt(1) - QuadExt(r) * a2;
  if (denom.sign() <= 0) throw bound_error("relative bound needs r < 1/alpha^2");
  const QuadExt v = QuadExt(r) * (QuadExt(1) - a2) / denom;
  return v.floor().get_si();
}

long gerzon_bound(long r) {
  if (r < 1) throw bound_error("rank must be positive");
  return r * (r + 1) / 2;
}

Rational welch_bound(long M, long r) {
  if (r < 1 || M <= r) throw bound_error("welch bound needs M > r >= 1");
  return Rational(M - r) / Rational(r * (M - 1));
}

}  // namespace eqlines
