#pragma once

// JSON forms of exact scalars, matrices, equiangular sets and reports.
// Every number is written as an exact string.

#include <string>

#include "json.hpp"

#include "eqlines/bounds.hpp"
#include "eqlines/pillars.hpp"
#include "eqlines/saturate.hpp"
#include "eqlines/seidel.hpp"

namespace eqlines {

/// Input that does not have the expected shape; `where` names the field.
class format_error : public std::runtime_error {
 public:
  format_error(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

nlohmann::json scalar_to_json(const QuadExt& x);
QuadExt scalar_from_json(const nlohmann::json& j, const std::string& where);

/// {"order": n, "field": "Q" | "Q(sqrt d)", "rows": [[...], ...]}
nlohmann::json matrix_to_json(const SymMatrix<QuadExt>& m);
nlohmann::json matrix_to_json(const SymMatrix<Rational>& m);
SymMatrix<QuadExt> matrix_from_json(const nlohmann::json& j, const std::string& where);

/// {"format", "alpha", "size", "rank", "seidel": rows of 0/+-1, "gram"}
nlohmann::json to_json(const EquiangularSet& e, bool with_gram = true);

/// Raw contents of an equiangular-set file before any checking.
struct EquiangularFile {
  QuadExt alpha;
  std::vector<std::vector<int>> seidel;
  bool has_gram = false;
  SymMatrix<QuadExt> gram;
};
EquiangularFile equiangular_file_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PillarDecomposition& d, const EquiangularSet& e);
nlohmann::json to_json(const SwitchingOp& op);
nlohmann::json to_json(const SaturationReport& s);

/// Parses text, turning syntax errors into format_error with the line.
nlohmann::json parse_json_text(const std::string& text, const std::string& name);

}  // namespace eqlines
