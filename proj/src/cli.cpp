#include "eqlines/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqlines/bounds.hpp"
#include "eqlines/constructions.hpp"
#include "eqlines/expected_tables.hpp"
#include "eqlines/json_io.hpp"
#include "eqlines/saturate.hpp"

namespace eqlines::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw format_error(path, "cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_atomic(path, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<Table2Row> rows_from_report(const BoundReport& rep) {
  std::vector<Table2Row> rows;
  for (const auto& r : rep.certificate["rows"]) {
    Table2Row row;
    row.t1111 = r["t1111"].get<long>();
    row.caps = r["caps"].get<std::array<long, 4>>();
    row.bound = r["M"].get<long>();
    rows.push_back(row);
  }
  return rows;
}

QuadExt parse_alpha(const std::string& spec) {
  try {
    return QuadExt::parse(spec);
  } catch (const std::exception& e) {
    throw format_error("--alpha", e.what());
  }
}

std::string neumann_table(const std::vector<NeumannCandidate>& cands) {
  std::ostringstream os;
  os << "c1\tc2\tc3\tc4\tdelta\n";
  for (const auto& c : cands) {
    os << c.c1 << '\t' << c.c2 << '\t' << c.c3 << '\t' << c.c4 << '\t' << c.delta << '\n';
  }
  return os.str();
}

struct Diffed {
  std::string text;
  json diff;
};

Diffed finish_reproduce(const std::string& name, const std::string& expected, const std::string& actual,
                        const std::string& out_dir, std::ostream& out, std::ostream& err) {
  Diffed d{actual, json::parse(tsv_diff_json(expected, actual))};
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_atomic(out_dir + "/" + name + ".tsv", actual);
    write_atomic(out_dir + "/" + name + ".diff.json", d.diff.dump(2) + "\n");
  }
  out << actual;
  err << d.diff.dump() << '\n';
  return d;
}

// ---- verify ---------------------------------------------------------------

int verify_file(const std::string& path, std::ostream& out, std::ostream& err) {
  EquiangularFile f;
  try {
    f = equiangular_file_from_json(parse_json_text(read_file(path), path));
  } catch (const format_error& e) {
    err << "error: " << (e.where().rfind(path, 0) == 0 ? "" : path + ": ") << e.what() << '\n';
    return 1;
  }
  json rep = {{"file", path}};
  auto violation = [&](const std::string& what, json where) {
    rep["ok"] = false;
    rep["violation"] = what;
    rep["location"] = std::move(where);
    out << dump(rep);
    return 2;
  };
  if (f.alpha.sign() <= 0 || (f.alpha - QuadExt(1)).sign() >= 0) {
    return violation("alpha " + f.alpha.to_string() + " is not in (0,1)", "$.alpha");
  }
  const size_t n = f.seidel.size();
  for (size_t i = 0; i < n; ++i) {
    if (f.seidel[i].size() != n) {
      return violation("row has " + std::to_string(f.seidel[i].size()) + " entries, expected " + std::to_string(n),
                       {{"matrix", "seidel"}, {"row", i}});
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      const int v = f.seidel[i][k];
      const bool ok = (i == k) ? v == 0 : ((v == 1 || v == -1) && f.seidel[k][i] == v);
      if (!ok) return violation("bad Seidel entry " + std::to_string(v), {{"matrix", "seidel"}, {"row", i}, {"col", k}});
    }
  }
  const SeidelMatrix a = SeidelMatrix::from_rows(f.seidel);
  if (f.has_gram) {
    if (f.gram.order() != n) return violation("Gram order differs from the Seidel order", "$.gram.order");
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = i; k < n; ++k) {
        const QuadExt& g = f.gram(i, k);
        const QuadExt want = i == k ? QuadExt(1) : (a(i, k) > 0 ? f.alpha : -f.alpha);
        if (!(g == want)) {
          return violation("Gram entry " + g.to_string() + " should be " + want.to_string(),
                           {{"matrix", "gram"}, {"row", i}, {"col", k}});
        }
      }
    }
  }
  const auto cert = psd_check(gram_matrix(f.alpha, a));
  if (!cert.psd()) {
    json w = json::array();
    for (const auto& x : cert.witness) w.push_back(x.to_string());
    rep["ok"] = false;
    rep["violation"] = "Gram matrix is not positive semidefinite";
    rep["witness"] = {{"x", w}, {"xGx", cert.witness_value.to_string()}};
    out << dump(rep);
    return 2;
  }
  const EquiangularSet e(f.alpha, a);
  const auto bs = base_size(e);
  rep["ok"] = true;
  rep["alpha"] = e.alpha().to_string();
  rep["size"] = n;
  rep["rank"] = e.rank();
  rep["psd"] = to_string(cert.verdict);
  rep["base_size"] = bs.K;
  rep["base"] = bs.base;
  out << dump(rep);
  return 0;
}

}  // namespace

void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw std::runtime_error("cannot write " + tmp);
    o << content;
    o.flush();
    if (!o) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string tsv_diff_json(const std::string& expected, const std::string& actual) {
  const auto e = split_lines(expected);
  const auto a = split_lines(actual);
  json mism = json::array();
  for (size_t i = 0; i < std::max(e.size(), a.size()); ++i) {
    const bool both = i < e.size() && i < a.size();
    const std::string ex = i < e.size() ? e[i] : "";
    const std::string ac = i < a.size() ? a[i] : "";
    if (!both || ex != ac) mism.push_back({{"line", i + 1}, {"expected", ex}, {"actual", ac}});
  }
  return json{{"match", mism.empty()}, {"expected_lines", e.size()}, {"actual_lines", a.size()}, {"mismatches", mism}}
      .dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with equiangular lines", "eqlines"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker count; results do not depend on it")->check(CLI::PositiveNumber);
  std::string cache_dir = default_cache_dir();
  app.add_option("--cache-dir", cache_dir, "Directory for graph class lists (default $EQLINES_CACHE_DIR)");

  // bound
  auto* bound = app.add_subcommand("bound", "Cardinality bounds");
  bound->require_subcommand(1);
  bool table = false;
  std::string out_path;
  long n = 0, rank_v = 0, count = 0, size_v = 14;
  std::optional<long> t1111, s_value;
  std::string alpha_spec;
  bound->add_flag("--table", table, "Aligned text instead of JSON");
  bound->add_option("--out", out_path, "Output file (default stdout)");
  auto* b_coex = bound->add_subcommand("coexistence", "Largest pillar next to a two-vector pillar");
  b_coex->add_option("--n", n, "alpha = 1/(2n+1)")->required();
  auto* b_t2 = bound->add_subcommand("table2", "Two (3,1) pillars at alpha = 1/5");
  b_t2->add_option("--t1111", t1111, "Fix t1111");
  auto* b_k3 = bound->add_subcommand("k3", "Base size 3");
  b_k3->add_option("--rank", rank_v)->required();
  auto* b_k4 = bound->add_subcommand("k4", "Base size 4");
  b_k4->add_option("--rank", rank_v)->required();
  b_k4->add_option("--s-value", s_value, "Value of the two-distance bound s(r-4, 1/13, -5/13)");
  auto* b_k5 = bound->add_subcommand("k5", "Base size 5");
  b_k5->add_option("--rank", rank_v)->required();
  auto* b_neu = bound->add_subcommand("neumann", "Angle restriction for many lines");
  b_neu->add_option("--rank", rank_v)->required();
  b_neu->add_option("--count", count)->required();
  auto* b_nc = bound->add_subcommand("neumann-candidates", "Irrational eigenvalue patterns");
  long nc_rank = 8;
  b_nc->add_option("--size", size_v, "Number of lines");
  b_nc->add_option("--rank", nc_rank);
  auto* b_rel = bound->add_subcommand("relative", "Relative bound");
  b_rel->add_option("--rank", rank_v)->required();
  b_rel->add_option("--alpha", alpha_spec)->required();

  // construct
  auto* cons = app.add_subcommand("construct", "Build an equiangular set");
  cons->require_subcommand(1);
  cons->add_option("--out", out_path, "Output file (default stdout)");
  bool no_gram = false;
  cons->add_flag("--no-gram", no_gram, "Omit the Gram matrix");
  auto* c_witt = cons->add_subcommand("witt276", "276 lines from the Witt design");
  std::string octads_path, pillars_path;
  bool all_octads = false;
  c_witt->add_option("--octads", octads_path, "Write the octads through point 1, one per line");
  c_witt->add_flag("--all-octads", all_octads, "With --octads: all 759 octads");
  c_witt->add_option("--pillars", pillars_path, "Write the base and pillar decomposition");
  auto* c_paley = cons->add_subcommand("paley", "Equiangular tight frame from a Paley conference matrix");
  long q = 17;
  c_paley->add_option("--q", q, "Prime = 1 mod 4");
  auto* c_simplex = cons->add_subcommand("simplex", "K-base");
  long k_v = 0;
  c_simplex->add_option("--k", k_v)->required();
  c_simplex->add_option("--alpha", alpha_spec)->required();
  auto* c_block = cons->add_subcommand("block52", "l disjoint triangles at angle 1/5");
  long ell = 1;
  c_block->add_option("--ell", ell)->required();

  // saturate, mstar
  auto* sat = app.add_subcommand("saturate", "Maximum equiangular set of given rank and angle");
  sat->add_option("--rank", rank_v)->required();
  sat->add_option("--alpha", alpha_spec, "P/Q or 1/sqrt(D)")->required();
  bool all_seeds = false;
  std::string out_dir;
  sat->add_flag("--all-seeds", all_seeds, "Report every positive definite seed");
  sat->add_option("--out", out_dir, "Directory for per-seed artifacts");
  auto* mst = app.add_subcommand("mstar", "Maximum over all angles");
  mst->add_option("--rank", rank_v)->required();

  // verify, reproduce
  auto* ver = app.add_subcommand("verify", "Check an equiangular-set JSON file");
  std::string verify_path;
  ver->add_option("file", verify_path)->required();
  auto* rep = app.add_subcommand("reproduce", "Recompute a pinned table and diff it");
  std::string which;
  rep->add_option("table", which)->required()->check(CLI::IsMember({"table2", "table3", "thm56"}));
  rep->add_option("--out", out_dir, "Directory for the table and its diff");
  long max_rank = 11;
  rep->add_option("--max-rank", max_rank, "table3: skip rows above this rank");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (bound->parsed()) {
      BoundReport r;
      std::string text;
      if (b_coex->parsed()) {
        r = pillar_coexistence_bound(n);
        text = "n\tbound\n" + std::to_string(n) + "\t" + std::to_string(*r.value) + "\n";
      } else if (b_t2->parsed()) {
        r = two_31_pillar_search(t1111);
        text = table2_text(rows_from_report(r));
      } else if (b_k3->parsed()) {
        r = k3_bound(rank_v);
      } else if (b_k4->parsed()) {
        r = k4_bound(rank_v, s_value);
      } else if (b_k5->parsed()) {
        r = k5_bound(rank_v);
      } else if (b_neu->parsed()) {
        const auto nr = neumann_restriction(rank_v, count);
        r.name = "neumann";
        r.formula = nr.description;
        r.inputs = {{"rank", rank_v}, {"count", count}};
        r.certificate = {{"applies", nr.applies},
                         {"odd_integer_reciprocals", nr.odd_integer_reciprocals},
                         {"inverse_sqrt_allowed", nr.inverse_sqrt_allowed},
                         {"conference_order", nr.conference_order}};
      } else if (b_nc->parsed()) {
        const auto c = neumann_candidates(size_v, nc_rank);
        const auto pairs = neumann_pairs(c);
        r.name = "neumann_candidates";
        r.value = static_cast<long long>(pairs.size());
        r.inputs = {{"size", size_v}, {"rank", nc_rank}};
        json list = json::array();
        for (const auto& x : c) {
          list.push_back({{"c1", x.c1}, {"c2", x.c2}, {"c3", x.c3}, {"c4", x.c4}, {"delta", x.delta},
                          {"a", x.a.to_string()}, {"a_star", x.a_star.to_string()}});
        }
        r.certificate = {{"pairs", pairs}, {"candidates", list}};
        text = neumann_table(c);
      } else if (b_rel->parsed()) {
        const QuadExt a = parse_alpha(alpha_spec);
        r.name = "relative";
        r.value = relative_bound(rank_v, a);
        r.formula = "floor(r(1 - a^2)/(1 - r a^2))";
        r.inputs = {{"rank", rank_v}, {"alpha", a.to_string()}};
      }
      if (table && text.empty()) text = r.name + "\t" + (r.value ? std::to_string(*r.value) : r.formula) + "\n";
      emit(out, out_path, table ? text : dump(to_json(r)));
      return 0;
    }

    if (cons->parsed()) {
      EquiangularSet e;
      if (c_witt->parsed()) {
        const WittSystem& w = witt276_cached();
        e = w.lines;
        if (!octads_path.empty()) {
          std::string text;
          for (PointSet s : all_octads ? w.octads_all : w.octads_through_1) {
            const auto pts = points_of(s);
            for (size_t i = 0; i < pts.size(); ++i) text += (i ? " " : "") + std::to_string(pts[i]);
            text += '\n';
          }
          write_atomic(octads_path, text);
        }
        if (!pillars_path.empty()) write_atomic(pillars_path, dump(to_json(witt276_base_and_pillars(w), e)));
      } else if (c_paley->parsed()) {
        e = conference_etf(paley_conference(q));
      } else if (c_simplex->parsed()) {
        if (k_v < 2) throw structure_error("simplex size must be at least 2");
        e = simplex_base(static_cast<size_t>(k_v), parse_alpha(alpha_spec));
      } else if (c_block->parsed()) {
        if (ell < 1) throw structure_error("--ell must be positive");
        e = block52_equiangular(static_cast<size_t>(ell));
      }
      emit(out, out_path, dump(to_json(e, !no_gram)));
      return 0;
    }

    if (sat->parsed()) {
      if (rank_v < 2) throw structure_error("--rank must be at least 2");
      const QuadExt a = parse_alpha(alpha_spec);
      const size_t r = static_cast<size_t>(rank_v);
      BoundReport br;
      if (all_seeds || !out_dir.empty()) {
        const MAlphaResult res = m_alpha_search(r, a, all_seeds, cache_dir);
        br.name = "m_alpha";
        br.value = static_cast<long long>(res.best);
        br.inputs = {{"rank", r}, {"alpha", alpha_spec}};
        json seeds = json::array();
        for (size_t i = 0; i < res.reports.size(); ++i) {
          seeds.push_back(to_json(res.reports[i]));
          if (!out_dir.empty()) {
            // The file is itself an equiangular-set document, so verify accepts it.
            json art = to_json(res.reports[i].realized, true);
            art["saturation"] = to_json(res.reports[i]);
            art["saturation"].erase("realized");
            write_atomic(out_dir + "/seed_" + std::to_string(i) + ".json", dump(art));
          }
        }
        br.certificate = {{"classes_scanned", res.classes_scanned},
                          {"pd_seeds", res.pd_seeds},
                          {"totals", res.totals},
                          {"seeds", seeds}};
        if (!out_dir.empty()) write_atomic(out_dir + "/summary.json", dump(to_json(br)));
      } else {
        br = m_alpha(r, a, cache_dir);
      }
      out << dump(to_json(br));
      return 0;
    }

    if (mst->parsed()) {
      if (rank_v < 4) throw structure_error("--rank must be at least 4");
      out << dump(to_json(m_star(static_cast<size_t>(rank_v), cache_dir)));
      return 0;
    }

    if (ver->parsed()) return verify_file(verify_path, out, err);

    if (rep->parsed()) {
      Diffed d;
      if (which == "table2") {
        const auto r = two_31_pillar_search();
        d = finish_reproduce("table2", expected::table2_tsv, table2_tsv(rows_from_report(r)), out_dir, out, err);
      } else if (which == "table3") {
        std::string expected_text = "rank\talpha\tvalue\n";
        std::string actual = expected_text;
        for (const auto& line : split_lines(expected::table3_tsv)) {
          if (line.empty() || line.rfind("rank", 0) == 0) continue;
          std::istringstream ls(line);
          long r = 0;
          std::string a, v;
          ls >> r >> a >> v;
          if (r > max_rank) continue;
          expected_text += line + "\n";
          const MAlphaResult res = m_alpha_search(static_cast<size_t>(r), parse_alpha(a), false, cache_dir);
          actual += std::to_string(r) + "\t" + a + "\t" + std::to_string(res.best) + "\n";
        }
        d = finish_reproduce("table3", expected_text, actual, out_dir, out, err);
      } else {
        std::string actual = "rank\tm_star\n";
        for (long r = 8; r <= 10; ++r) {
          const auto br = m_star(static_cast<size_t>(r), cache_dir);
          actual += std::to_string(r) + "\t" + std::to_string(*br.value) + "\n";
        }
        d = finish_reproduce("thm56", expected::thm56_tsv, actual, out_dir, out, err);
      }
      return d.diff["match"].get<bool>() ? 0 : 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace eqlines::cli
