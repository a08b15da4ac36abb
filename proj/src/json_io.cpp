#include "eqlines/json_io.hpp"

namespace eqlines {

using nlohmann::json;

namespace {

std::string field_name(const SymMatrix<QuadExt>& m) {
  long d = 0;
  for (size_t i = 0; i < m.order(); ++i) {
    for (size_t j = i; j < m.order(); ++j) {
      if (!m(i, j).is_rational()) d = m(i, j).d();
    }
  }
  return d == 0 ? "Q" : "Q(sqrt " + std::to_string(d) + ")";
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw format_error(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw format_error(where + "." + key, "missing");
  return *it;
}

}  // namespace

json scalar_to_json(const QuadExt& x) { return x.to_string(); }

QuadExt scalar_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return QuadExt(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw format_error(where, "expected an exact number as a string");
  try {
    return QuadExt::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw format_error(where, e.what());
  }
}

json matrix_to_json(const SymMatrix<QuadExt>& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.order(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"order", m.order()}, {"field", field_name(m)}, {"rows", rows}};
}

json matrix_to_json(const SymMatrix<Rational>& m) {
  return matrix_to_json(m.map<QuadExt>([](const Rational& x) { return QuadExt(x); }));
}

SymMatrix<QuadExt> matrix_from_json(const json& j, const std::string& where) {
  const json& rows = require(j, "rows", where);
  if (!rows.is_array()) throw format_error(where + ".rows", "expected an array");
  const size_t n = rows.size();
  if (j.contains("order") && (!j["order"].is_number_unsigned() || j["order"].get<size_t>() != n)) {
    throw format_error(where + ".order", "does not match the number of rows");
  }
  SymMatrix<QuadExt> m(n);
  for (size_t i = 0; i < n; ++i) {
    const std::string rw = where + ".rows[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n) throw format_error(rw, "expected " + std::to_string(n) + " entries");
    for (size_t k = 0; k < n; ++k) {
      const QuadExt v = scalar_from_json(rows[i][k], rw + "[" + std::to_string(k) + "]");
      if (k >= i) {
        m.at(i, k) = v;
      } else if (!(m(k, i) == v)) {
        throw format_error(rw + "[" + std::to_string(k) + "]", "breaks symmetry");
      }
    }
  }
  return m;
}

json to_json(const EquiangularSet& e, bool with_gram) {
  json j = {{"format", "eqlines/equiangular-set"},
            {"alpha", e.alpha().to_string()},
            {"size", e.size()},
            {"rank", e.rank()},
            {"seidel", e.seidel().rows()}};
  if (with_gram) j["gram"] = matrix_to_json(e.gram());
  return j;
}

EquiangularFile equiangular_file_from_json(const json& j) {
  EquiangularFile f;
  f.alpha = scalar_from_json(require(j, "alpha", "$"), "$.alpha");
  const json& s = require(j, "seidel", "$");
  if (!s.is_array()) throw format_error("$.seidel", "expected an array of rows");
  for (size_t i = 0; i < s.size(); ++i) {
    const std::string rw = "$.seidel[" + std::to_string(i) + "]";
    if (!s[i].is_array()) throw format_error(rw, "expected an array");
    std::vector<int> row;
    for (size_t k = 0; k < s[i].size(); ++k) {
      if (!s[i][k].is_number_integer()) throw format_error(rw + "[" + std::to_string(k) + "]", "expected an integer");
      row.push_back(s[i][k].get<int>());
    }
    f.seidel.push_back(std::move(row));
  }
  if (j.contains("gram")) {
    f.has_gram = true;
    f.gram = matrix_from_json(j["gram"], "$.gram");
  }
  return f;
}

json to_json(const PillarDecomposition& d, const EquiangularSet& e) {
  json pillars = json::object();
  json details = json::array();
  for (const auto& [key, members] : d.pillars) {
    pillars[key] = members;
    const Graph g = d.pillar_graph(e, key);
    details.push_back({{"key", key},
                       {"plus", PillarDecomposition::plus_count(key)},
                       {"size", members.size()},
                       {"seidel_graph6", g.to_graph6()},
                       {"components", g.components().size()}});
  }
  return {{"alpha", d.base.alpha.to_string()},
          {"base", d.base.vertices},
          {"base_signs", d.base.signs},
          {"tie_rule", d.rule == TieRule::plus_last ? "plus_last" : "minus_last"},
          {"pillars", pillars},
          {"pillar_details", details}};
}

json to_json(const SwitchingOp& op) { return {{"flips", op.flips}, {"perm", op.perm}}; }

json to_json(const SaturationReport& s) {
  return {{"rank", s.seed.r},
          {"alpha", s.seed.alpha.to_string()},
          {"seed_graph6", s.seed.graph.to_graph6()},
          {"candidate_count", s.candidate_count},
          {"clique_size", s.clique_size},
          {"total", s.total},
          {"clique_witness", s.clique_witness},
          {"maximal", s.maximal},
          {"realized", to_json(s.realized, false)}};
}

json parse_json_text(const std::string& text, const std::string& name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1;
    for (size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n' ? 1 : 0;
    throw format_error(name + ":" + std::to_string(line), e.what());
  }
}

}  // namespace eqlines
