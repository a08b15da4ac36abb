#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eqlines/bounds.hpp"
#include "eqlines/cli.hpp"
#include "eqlines/constructions.hpp"
#include "eqlines/json_io.hpp"
#include "eqlines/saturate.hpp"

namespace py = pybind11;
using namespace eqlines;
using nlohmann::json;

namespace {

// Results cross the boundary as JSON text; the Python side decodes it.
std::string text(const json& j) { return j.dump(); }

SeidelMatrix seidel_from(const std::vector<std::vector<int>>& rows) { return SeidelMatrix::from_rows(rows); }

}  // namespace

PYBIND11_MODULE(_eqlines, m) {
  m.doc() = "Exact computations with equiangular lines";

  py::register_exception<format_error>(m, "FormatError", PyExc_ValueError);
  py::register_exception<structure_error>(m, "StructureError", PyExc_ValueError);
  py::register_exception<bound_error>(m, "BoundError", PyExc_ValueError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<arithmetic_error>(m, "ArithmeticError", PyExc_ArithmeticError);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line front end in-process; returns (exit code, stdout, stderr).");

  m.def("normalize_scalar", [](const std::string& s) { return QuadExt::parse(s).to_string(); });

  // bounds
  m.def("coexistence_bound", [](long n) { return text(to_json(pillar_coexistence_bound(n))); }, py::arg("n"));
  m.def("coexistence_check", [](long n, std::array<long, 4> ell) { return coexistence_check(n, ell).feasible; },
        py::arg("n"), py::arg("ell"));
  m.def("per_variable_caps", &per_variable_caps);
  m.def("degree_class_cap", [](int w) { return degree_class_cap(w).cap; }, py::arg("weight"));
  m.def("table2_tsv", [] {
    py::gil_scoped_release release;
    std::ostringstream out, err;
    cli::run({"reproduce", "table2"}, out, err);
    return out.str();
  });
  m.def("k3_bound", [](long r) { return *k3_bound(r).value; }, py::arg("rank"));
  m.def("k5_bound", [](long r) { return *k5_bound(r).value; }, py::arg("rank"));
  m.def("relative_bound", [](long r, const std::string& a) { return relative_bound(r, QuadExt::parse(a)); },
        py::arg("rank"), py::arg("alpha"));
  m.def("gerzon_bound", &gerzon_bound, py::arg("rank"));
  m.def("neumann_pairs", [](long size, long rank) { return neumann_pairs(neumann_candidates(size, rank)); },
        py::arg("size") = 14, py::arg("rank") = 8);

  // linear algebra and graphs on explicit Seidel matrices
  m.def("psd_check", [](const std::vector<std::vector<std::string>>& rows) {
    const size_t n = rows.size();
    SymMatrix<QuadExt> g(n);
    for (size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw format_error("rows[" + std::to_string(i) + "]", "not square");
      for (size_t j = i; j < n; ++j) g.at(i, j) = QuadExt::parse(rows[i][j]);
    }
    const auto cert = psd_check(g);
    return py::make_tuple(to_string(cert.verdict), cert.rank);
  }, py::arg("rows"), "Exact PSD verdict and rank of a symmetric matrix given as exact strings.");
  m.def("char_poly", [](const std::vector<std::vector<int>>& rows) {
    std::vector<std::string> out;
    const IntPolynomial p = seidel_from(rows).char_poly();
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
  }, py::arg("seidel"), "Coefficients of det(xI - A), low degree first, as decimal strings.");
  m.def("base_size", [](const std::vector<std::vector<int>>& rows) {
    const SeidelMatrix a = seidel_from(rows);
    const BaseSizeResult r = base_size(a, a.order());
    return py::make_tuple(r.K, r.base);
  }, py::arg("seidel"));
  m.def("max_clique", [](size_t n, const std::vector<std::pair<size_t, size_t>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    const CliqueResult c = max_clique(g);
    return c.witness;
  }, py::arg("n"), py::arg("edges"));
  m.def("switching_equivalence", [](const std::vector<std::vector<int>>& a,
                                    const std::vector<std::vector<int>>& b) -> py::object {
    const auto op = switching_equivalence(seidel_from(a), seidel_from(b));
    if (!op) return py::none();
    return py::str(text(to_json(*op)));
  }, py::arg("a"), py::arg("b"));

  // constructions
  m.def("witt276", [](bool with_gram) {
    const WittSystem& w = witt276_cached();
    json j = to_json(w.lines, with_gram);
    j["pillars"] = to_json(witt276_base_and_pillars(w), w.lines);
    return text(j);
  }, py::arg("with_gram") = false);
  m.def("paley_etf", [](long q, bool with_gram) { return text(to_json(conference_etf(paley_conference(q)), with_gram)); },
        py::arg("q") = 17, py::arg("with_gram") = true);
  m.def("block52", [](size_t ell) { return text(to_json(block52_equiangular(ell))); }, py::arg("ell"));
  m.def("simplex", [](size_t k, const std::string& a) { return text(to_json(simplex_base(k, QuadExt::parse(a)))); },
        py::arg("k"), py::arg("alpha"));

  // saturation
  m.def("m_alpha", [](size_t r, const std::string& a, const std::string& cache) {
    py::gil_scoped_release release;
    return text(to_json(m_alpha(r, QuadExt::parse(a), cache)));
  }, py::arg("rank"), py::arg("alpha"), py::arg("cache_dir") = "");
  m.def("m_star", [](size_t r, const std::string& cache) {
    py::gil_scoped_release release;
    return text(to_json(m_star(r, cache)));
  }, py::arg("rank"), py::arg("cache_dir") = "");
  m.def("saturate", [](size_t r, const std::string& a, const std::string& cache) {
    MAlphaResult res;
    {
      py::gil_scoped_release release;
      res = m_alpha_search(r, QuadExt::parse(a), true, cache);
    }
    json reports = json::array();
    for (const auto& s : res.reports) {
      json j = to_json(s);
      j["realized"] = to_json(s.realized, false);
      reports.push_back(std::move(j));
    }
    return text({{"rank", r},
                 {"alpha", res.alpha.to_string()},
                 {"classes_scanned", res.classes_scanned},
                 {"pd_seeds", res.pd_seeds},
                 {"best", res.best},
                 {"totals", res.totals},
                 {"reports", reports}});
  }, py::arg("rank"), py::arg("alpha"), py::arg("cache_dir") = "");

#ifdef VERSION_INFO
#define EQ_STR(x) #x
#define EQ_XSTR(x) EQ_STR(x)
  m.attr("__version__") = EQ_XSTR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
