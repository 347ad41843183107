#include "durfee/report.hpp"

#include "doctest.h"
#include "durfee/errors.hpp"

using namespace durfee;

TEST_CASE("analyze A3: Du Val report") {
  AnalysisReport r = analyze_graph(make_chain(3, -2), {});
  CHECK(r.du_val);
  CHECK(r.z_k.is_zero());
  CHECK(r.min_chi.optimum_value == 0);
  CHECK(r.z_min == ones_cycle(3));
  CHECK(r.p_a == 1);
  CHECK(r.conjecture.holds);
  CHECK(r.complete);
  // without --pg only the graph-side bound row survives
  REQUIRE(r.bounds.rows.size() == 1);
  CHECK(r.bounds.rows[0].id == "B2");
  CHECK_FALSE(r.bounds.rows[0].applicable);  // A3 is not unimodular (det -4)
}

TEST_CASE("analyze cone(4) with Gorenstein inputs") {
  AnalyzeOptions opt;
  opt.p_g = 4;
  opt.embedding_dim = 3;
  opt.gorenstein = true;
  opt.nu = 4;
  AnalysisReport r = analyze_graph(make_cone(4), opt);
  REQUIRE(r.has_durfee);
  REQUIRE(r.triple.has_value());
  CHECK(r.triple->sigma == -17);
  CHECK(r.nu_provenance == "user");
  for (const BoundRow& row : r.bounds.rows)
    if (row.applicable) CHECK(row.holds);
}

TEST_CASE("analyze defaults nu to the Z_min proxy with a warning") {
  AnalyzeOptions opt;
  opt.p_g = 4;
  opt.embedding_dim = 3;
  opt.gorenstein = true;
  AnalysisReport r = analyze_graph(make_cone(4), opt);
  CHECK(r.nu_provenance == "proxy");
  CHECK(*r.data.nu == 4);  // -(Z_min)^2 = 4 for the single (-4)-vertex
  bool warned = false;
  for (const std::string& w : r.warnings)
    if (w.find("proxy") != std::string::npos || w.find("Z_min") != std::string::npos)
      warned = true;
  CHECK(warned);
}

TEST_CASE("analyze E8: unimodular block with slack 8") {
  ResolutionGraph e8 = parse_resolution_graph(
      "vertex e1 -2 0\nvertex e2 -2 0\nvertex e3 -2 0\nvertex e4 -2 0\n"
      "vertex e5 -2 0\nvertex e6 -2 0\nvertex e7 -2 0\nvertex e8 -2 0\n"
      "edge e1 e2\nedge e2 e3\nedge e3 e4\nedge e4 e5\nedge e5 e6\nedge e6 e7\n"
      "edge e5 e8\n");
  AnalysisReport r = analyze_graph(e8, {});
  CHECK(r.unimodular);
  REQUIRE(r.elkies.has_value());
  CHECK(r.elkies->slack == 8);
  // unimodular, so the pg-free row B2 evaluates: (K^2+s)/8 = 1 >= min chi = 0
  REQUIRE(r.bounds.rows.size() == 1);
  CHECK(r.bounds.rows[0].applicable);
  CHECK(r.bounds.rows[0].holds);

  OrderedJson j = report_to_json(r);
  CHECK(j["lattice"]["unimodular"] == true);
  CHECK(j["characteristic"]["elkies"]["slack"] == "8");
  CHECK(j["durfee"]["inputs"]["p_g"].is_null());
}

TEST_CASE("JSON schema: fixed key set, exact values as strings") {
  AnalyzeOptions opt;
  opt.p_g = 4;
  opt.embedding_dim = 3;
  opt.gorenstein = true;
  AnalysisReport r = analyze_graph(make_cone(4), opt);
  OrderedJson j = report_to_json(r);
  for (const char* key : {"graph", "lattice", "cycles", "characteristic", "durfee", "warnings",
                          "complete"})
    CHECK(j.contains(key));
  CHECK(j["lattice"]["discriminant"].is_string());
  CHECK(j["lattice"]["k2_plus_s"] == "-15");
  CHECK(j["cycles"]["min_chi"]["value"] == "-2");
  CHECK(j["durfee"]["laufer_formula"]["sigma"] == "-17");
  // text and JSON come from the same report value
  std::string text = report_to_text(r);
  CHECK(text.find("sigma = -17") != std::string::npos);
}

TEST_CASE("analyze JSON round-trips through a parser") {
  AnalyzeOptions opt;
  opt.p_g = 4;
  opt.embedding_dim = 3;
  opt.gorenstein = true;
  std::string dumped = report_to_json(analyze_graph(make_cone(4), opt)).dump(2);
  OrderedJson parsed = OrderedJson::parse(dumped);
  CHECK(parsed["durfee"]["laufer_formula"]["mu"] == "27");
  CHECK(parsed.dump(2) == dumped);
}

TEST_CASE("user zmax is sanity-checked against Z_min") {
  AnalyzeOptions opt;
  opt.p_g = 4;
  opt.embedding_dim = 3;
  opt.gorenstein = true;
  opt.z_max = parse_cycle("0");  // below Z_min = E on the cone
  AnalysisReport r = analyze_graph(make_cone(4), opt);
  bool warned = false;
  for (const std::string& w : r.warnings)
    if (w.find("Z_max") != std::string::npos) warned = true;
  CHECK(warned);
  AnalyzeOptions bad_dim = opt;
  bad_dim.z_max = parse_cycle("1,1");
  CHECK_THROWS_AS(analyze_graph(make_cone(4), bad_dim), ValidationError);
}

TEST_CASE("conjecture scan is deterministic and index-ordered") {
  ConjectureScanOptions opt;
  opt.count = 25;
  opt.max_vertices = 5;
  opt.seed = 31;
  ConjectureScanSummary a = run_conjecture_scan(opt);
  ConjectureScanSummary b = run_conjecture_scan(opt);
  CHECK(scan_to_json(a).dump(2) == scan_to_json(b).dump(2));
  CHECK(a.violations == 0);
  for (int i = 0; i < opt.count; ++i) CHECK(a.entries[i].index == i);

  opt.seed = 32;
  ConjectureScanSummary c = run_conjecture_scan(opt);
  CHECK(scan_to_json(a).dump(2) != scan_to_json(c).dump(2));
}

TEST_CASE("empty conjecture scan") {
  ConjectureScanOptions opt;
  opt.count = 0;
  opt.seed = 1;
  ConjectureScanSummary s = run_conjecture_scan(opt);
  CHECK(s.entries.empty());
  CHECK(s.violations == 0);
}

TEST_CASE("monomial verify batch determinism and correctness") {
  MonomialVerifyOptions opt;
  opt.random_count = 30;
  opt.vars = 3;
  opt.d = 2;
  opt.max_exp = 3;
  opt.seed = 9;
  opt.rays = 5;
  MonomialVerifySummary a = run_monomial_verify(opt);
  MonomialVerifySummary b = run_monomial_verify(opt);
  CHECK(monomial_to_json(a).dump(2) == monomial_to_json(b).dump(2));
  CHECK(a.all_hold);
  for (const MonomialVerifyEntry& e : a.entries) {
    CHECK(e.holds);
    CHECK(e.strict);  // d = 2, vars = 3
    CHECK(e.rays_passed == e.rays_checked);
  }
}

TEST_CASE("monomial verify with explicit ideals") {
  MonomialVerifyOptions opt;
  opt.ideals = {make_ideal(2, {{1, 0}, {0, 1}}), make_ideal(2, {{1, 0}, {0, 1}})};
  opt.rays = 10;
  MonomialVerifySummary s = run_monomial_verify(opt);
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0].lhs == "4");
  CHECK(s.entries[0].rhs == "3");
  CHECK(s.entries[0].strict);
  CHECK(s.entries[0].rays_passed == 10);
}

TEST_CASE("incomplete searches flip the report's complete flag") {
  AnalyzeOptions opt;
  opt.node_budget = 2;
  AnalysisReport r = analyze_graph(make_random(6, -4, -2, 0, 1, 4), opt);
  CHECK_FALSE(r.complete);
}
