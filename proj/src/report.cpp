#include "durfee/report.hpp"

#include <omp.h>

#include <exception>
#include <sstream>

#include "durfee/errors.hpp"
#include "durfee/rng.hpp"

namespace durfee {

AnalysisReport analyze_graph(const ResolutionGraph& g, const AnalyzeOptions& opt) {
  LatticeContext ctx = build_context(g);
  AnalysisReport r;
  r.graph_canonical = serialize_resolution_graph(g);
  r.graph_hash = graph_hash(g);
  r.s = ctx.s;
  r.discriminant = ctx.discriminant;
  r.unimodular = ctx.unimodular;
  r.z_k = ctx.z_k;
  r.numerically_gorenstein = ctx.numerically_gorenstein;
  r.du_val = ctx.du_val;
  r.k_squared = ctx.k_squared;
  r.k2_plus_s = ctx.k2_plus_s;
  r.warnings = ctx.warnings;

  r.z_min = artin_cycle(ctx);
  r.z_min_squared = pairing(ctx, r.z_min, r.z_min);

  r.min_chi = minimize_chi(ctx, opt.node_budget, opt.minimizer_cap);
  r.p_a = Rat(1) - r.min_chi.optimum_value;

  if (ctx.unimodular) r.elkies = elkies_min_square(ctx, opt.node_budget);
  r.conjecture = check_coset_conjecture(ctx, opt.node_budget);

  r.complete = r.min_chi.complete && r.conjecture.search.complete &&
               (!r.elkies || r.elkies->search.complete);

  r.has_durfee = true;
  r.data.p_g = opt.p_g;
  r.pg_provenance = opt.p_g ? "user" : "";
  r.data.mu0 = int_of(link_first_betti(g));
  if (rat_is_integer(ctx.k2_plus_s)) r.data.k2_plus_s = ctx.k2_plus_s.get_num();
  r.data.embedding_dim = opt.embedding_dim;
  r.data.epsilon = opt.gorenstein ? 1 : 0;
  if (opt.nu) {
    r.data.nu = opt.nu;
    r.data.nu_is_proxy = false;
    r.nu_provenance = "user";
  } else {
    r.data.nu = Rat(-r.z_min_squared).get_num();
    r.data.nu_is_proxy = true;
    r.nu_provenance = "proxy";
    if (opt.p_g)
      r.warnings.push_back("multiplicity nu defaulted to -(Z_min)^2 = " + r.data.nu->get_str() +
                           " (the maximal cycle only satisfies Z^2 >= -nu); pass --nu to "
                           "override");
  }
  r.data.t = opt.t;

  ZCycleInput z_input;
  if (opt.z_max) {
    if (opt.z_max->dim() != ctx.s) throw ValidationError("--zmax has the wrong dimension");
    if (!opt.z_max->is_integral())
      r.warnings.push_back("user Z_max is not an integral cycle");
    else if (!cycle_leq(r.z_min, *opt.z_max))
      r.warnings.push_back("user Z_max is not >= Z_min coordinatewise; the maximal cycle "
                           "always dominates the minimal one");
    z_input.z = *opt.z_max;
    z_input.is_proxy = false;
  } else {
    z_input.z = r.z_min;
    z_input.is_proxy = true;
  }

  if (opt.p_g && r.data.k2_plus_s)
    r.triple = smoothing_invariants(*r.data.p_g, r.data.mu0, *r.data.k2_plus_s);
  r.bounds = evaluate_bounds(
      ctx, r.data,
      r.min_chi.complete ? std::optional<Rat>(r.min_chi.optimum_value) : std::nullopt, z_input);
  if (!opt.p_g) {
    // only the graph-side row (K^2+s)/8 >= min chi survives without --pg
    std::vector<BoundRow> kept;
    for (BoundRow& row : r.bounds.rows) {
      bool needs_pg = false;
      for (const std::string& v : row.assumptions_violated)
        if (v == "p_g not supplied") needs_pg = true;
      if (!needs_pg) kept.push_back(std::move(row));
    }
    r.bounds.rows = std::move(kept);
  }
  return r;
}

namespace {

OrderedJson cycle_json(const Cycle& c) {
  OrderedJson arr = OrderedJson::array();
  for (const std::string& s : cycle_strings(c)) arr.push_back(s);
  return arr;
}

OrderedJson search_json(const SearchResult& sr) {
  OrderedJson j;
  j["value"] = rat_str(sr.optimum_value);
  j["canonical_minimizer"] = cycle_json(sr.canonical);
  OrderedJson mins = OrderedJson::array();
  for (const Cycle& m : sr.minimizers) mins.push_back(cycle_json(m));
  j["minimizers"] = mins;
  j["minimizer_count"] = sr.minimizer_count;
  j["nodes_visited"] = sr.nodes_visited;
  j["complete"] = sr.complete;
  return j;
}

OrderedJson bounds_json(const BoundReport& b) {
  OrderedJson rows = OrderedJson::array();
  for (const BoundRow& r : b.rows) {
    OrderedJson j;
    j["id"] = r.id;
    j["description"] = r.description;
    if (r.applicable) {
      j["lhs"] = rat_str(*r.lhs);
      j["rhs"] = rat_str(*r.rhs);
      j["margin"] = rat_str(*r.margin);
      j["holds"] = r.holds;
      j["status"] = r.holds ? "holds" : "violated";
    } else {
      j["status"] = "not-applicable";
    }
    j["assumptions_violated"] = r.assumptions_violated;
    j["notes"] = r.notes;
    rows.push_back(j);
  }
  return rows;
}

}  // namespace

OrderedJson report_to_json(const AnalysisReport& r) {
  OrderedJson j;
  j["graph"] = {{"hash", r.graph_hash}, {"s", r.s}, {"canonical", r.graph_canonical}};
  OrderedJson lat;
  lat["s"] = r.s;
  lat["discriminant"] = r.discriminant.get_str();
  lat["unimodular"] = r.unimodular;
  lat["z_k"] = cycle_json(r.z_k);
  lat["numerically_gorenstein"] = r.numerically_gorenstein;
  lat["du_val"] = r.du_val;
  lat["k_squared"] = rat_str(r.k_squared);
  lat["k2_plus_s"] = rat_str(r.k2_plus_s);
  j["lattice"] = lat;

  OrderedJson cyc;
  cyc["z_min"] = cycle_json(r.z_min);
  cyc["z_min_squared"] = rat_str(r.z_min_squared);
  cyc["min_chi"] = search_json(r.min_chi);
  cyc["p_a"] = rat_str(r.p_a);
  j["cycles"] = cyc;

  OrderedJson ch;
  if (r.elkies) {
    OrderedJson e;
    e["xi"] = cycle_json(r.elkies->xi);
    e["xi_squared"] = rat_str(r.elkies->xi_squared);
    e["slack"] = rat_str(r.elkies->slack);
    e["nodes_visited"] = r.elkies->search.nodes_visited;
    e["complete"] = r.elkies->search.complete;
    ch["elkies"] = e;
  } else {
    ch["elkies"] = nullptr;
  }
  OrderedJson cc;
  cc["xi"] = cycle_json(r.conjecture.xi);
  cc["xi_squared"] = rat_str(r.conjecture.xi_squared);
  cc["z_min_squared"] = rat_str(r.conjecture.z_min_squared);
  cc["holds"] = r.conjecture.holds;
  cc["nodes_visited"] = r.conjecture.search.nodes_visited;
  cc["complete"] = r.conjecture.search.complete;
  ch["coset_conjecture"] = cc;
  j["characteristic"] = ch;

  if (r.has_durfee) {
    OrderedJson d;
    OrderedJson inputs;
    if (r.data.p_g)
      inputs["p_g"] = {{"value", r.data.p_g->get_str()}, {"provenance", r.pg_provenance}};
    else
      inputs["p_g"] = nullptr;
    if (r.data.embedding_dim >= 3) inputs["e"] = r.data.embedding_dim;
    else inputs["e"] = nullptr;
    inputs["gorenstein"] = (r.data.epsilon == 1);
    if (r.data.nu)
      inputs["nu"] = {{"value", r.data.nu->get_str()}, {"provenance", r.nu_provenance}};
    else
      inputs["nu"] = nullptr;
    if (r.data.t) inputs["t"] = *r.data.t;
    else inputs["t"] = nullptr;
    d["inputs"] = inputs;
    if (r.triple) {
      OrderedJson t;
      t["mu"] = r.triple->mu.get_str();
      t["sigma"] = r.triple->sigma.get_str();
      t["mu_plus"] = r.triple->mu_plus.get_str();
      t["mu_minus"] = r.triple->mu_minus.get_str();
      t["realizable"] = r.triple->realizable;
      d["laufer_formula"] = t;
    } else {
      d["laufer_formula"] = nullptr;
    }
    d["bounds"] = bounds_json(r.bounds);
    j["durfee"] = d;
  } else {
    j["durfee"] = nullptr;
  }
  j["warnings"] = r.warnings;
  j["complete"] = r.complete;
  return j;
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "graph " << r.graph_hash << " (s = " << r.s << ")\n";
  os << "  discriminant      " << r.discriminant.get_str()
     << (r.unimodular ? "  (unimodular)" : "") << "\n";
  os << "  Z_K               " << cycle_str(r.z_k)
     << (r.du_val ? "  (Du Val)" : r.numerically_gorenstein ? "  (numerically Gorenstein)" : "")
     << "\n";
  os << "  K^2               " << rat_str(r.k_squared) << ", K^2+s = " << rat_str(r.k2_plus_s)
     << "\n";
  os << "  Z_min             " << cycle_str(r.z_min) << ", Z_min^2 = " << rat_str(r.z_min_squared)
     << "\n";
  os << "  min chi           " << rat_str(r.min_chi.optimum_value) << " at "
     << cycle_str(r.min_chi.canonical) << " (" << r.min_chi.minimizer_count << " minimizer"
     << (r.min_chi.minimizer_count == 1 ? "" : "s") << ", " << r.min_chi.nodes_visited
     << " nodes" << (r.min_chi.complete ? "" : ", INCOMPLETE") << ")\n";
  os << "  p_a               " << rat_str(r.p_a) << "\n";
  if (r.elkies) {
    os << "  elkies xi         " << cycle_str(r.elkies->xi)
       << ", xi^2 = " << rat_str(r.elkies->xi_squared)
       << ", slack xi^2+s = " << rat_str(r.elkies->slack)
       << (r.elkies->search.complete ? "" : " (INCOMPLETE)") << "\n";
  }
  os << "  coset search      xi = " << cycle_str(r.conjecture.xi)
     << ", xi^2 = " << rat_str(r.conjecture.xi_squared)
     << ", xi^2+s >= Z_min^2: " << (r.conjecture.holds ? "holds" : "VIOLATED")
     << (r.conjecture.search.complete ? "" : " (INCOMPLETE)") << "\n";
  if (r.has_durfee) {
    os << "  durfee inputs     p_g = "
       << (r.data.p_g ? r.data.p_g->get_str() + " (" + r.pg_provenance + ")" : "not supplied");
    if (r.data.embedding_dim >= 3) os << ", e = " << r.data.embedding_dim;
    os << ", eps = " << r.data.epsilon;
    if (r.data.nu) os << ", nu = " << r.data.nu->get_str() << " (" << r.nu_provenance << ")";
    os << "\n";
    if (r.triple) {
      os << "  Laufer formula    mu = " << r.triple->mu.get_str()
         << ", sigma = " << r.triple->sigma.get_str() << ", (mu+, mu0, mu-) = ("
         << r.triple->mu_plus.get_str() << ", " << r.data.mu0.get_str() << ", "
         << r.triple->mu_minus.get_str() << ")"
         << (r.triple->realizable ? "" : "  [not realizable]") << "\n";
    }
    os << "  bounds\n";
    for (const BoundRow& row : r.bounds.rows) {
      os << "    " << row.id;
      for (size_t k = row.id.size(); k < 12; ++k) os << ' ';
      if (row.applicable) {
        os << (row.holds ? "holds    " : "VIOLATED ") << rat_str(*row.lhs) << " >= "
           << rat_str(*row.rhs) << " (margin " << rat_str(*row.margin) << ")";
      } else {
        os << "n/a      " << join(row.assumptions_violated, "; ");
      }
      if (!row.notes.empty()) os << "  [" << join(row.notes, "; ") << "]";
      os << "\n";
    }
  }
  for (const std::string& w : r.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

ConjectureScanSummary run_conjecture_scan(const ConjectureScanOptions& opt) {
  ConjectureScanSummary summary;
  summary.options = opt;
  summary.entries.resize(opt.count);
  std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < opt.count; ++i) {
    ConjectureScanEntry& e = summary.entries[i];
    e.index = i;
    try {
      uint64_t instance_seed = mix_seed(opt.seed, static_cast<uint64_t>(i));
      DetRng rng(instance_seed);
      int n = static_cast<int>(rng.range(1, opt.max_vertices));
      ResolutionGraph g =
          make_random(n, opt.weight_min, opt.weight_max, opt.genus_min, opt.genus_max,
                      mix_seed(instance_seed, 0x67a1));
      LatticeContext ctx = build_context(g);
      CosetConjectureResult c = check_coset_conjecture(ctx, opt.node_budget);
      e.graph_hash = graph_hash(g);
      e.s = ctx.s;
      e.discriminant = ctx.discriminant.get_str();
      e.xi = cycle_str(c.xi);
      e.xi_squared = rat_str(c.xi_squared);
      e.z_min_squared = rat_str(c.z_min_squared);
      e.holds = c.holds;
      e.complete = c.search.complete;
      e.nodes = c.search.nodes_visited;
      e.generated = true;
    } catch (const ValidationError&) {
      e.generated = false;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (const ConjectureScanEntry& e : summary.entries) {
    if (e.generated && !e.holds) ++summary.violations;
    if (e.generated && !e.complete) ++summary.incomplete;
  }
  return summary;
}

OrderedJson scan_to_json(const ConjectureScanSummary& s) {
  OrderedJson j;
  j["scan"] = "coset-conjecture";
  j["options"] = {{"count", s.options.count},
                  {"max_vertices", s.options.max_vertices},
                  {"seed", s.options.seed},
                  {"weight_min", s.options.weight_min},
                  {"weight_max", s.options.weight_max},
                  {"genus_min", s.options.genus_min},
                  {"genus_max", s.options.genus_max},
                  {"node_budget", s.options.node_budget}};
  OrderedJson entries = OrderedJson::array();
  for (const ConjectureScanEntry& e : s.entries) {
    OrderedJson je;
    je["index"] = e.index;
    je["generated"] = e.generated;
    if (e.generated) {
      je["graph_hash"] = e.graph_hash;
      je["s"] = e.s;
      je["discriminant"] = e.discriminant;
      je["xi"] = e.xi;
      je["xi_squared"] = e.xi_squared;
      je["z_min_squared"] = e.z_min_squared;
      je["holds"] = e.holds;
      je["complete"] = e.complete;
      je["nodes_visited"] = e.nodes;
    }
    entries.push_back(je);
  }
  j["entries"] = entries;
  j["violations"] = s.violations;
  j["incomplete"] = s.incomplete;
  return j;
}

std::string scan_to_text(const ConjectureScanSummary& s) {
  std::ostringstream os;
  os << "conjecture scan: " << s.options.count << " instances, max " << s.options.max_vertices
     << " vertices, seed " << s.options.seed << "\n";
  for (const ConjectureScanEntry& e : s.entries) {
    os << "  #" << e.index;
    if (!e.generated) {
      os << "  generation failed (no negative-definite graph in budget)\n";
      continue;
    }
    os << "  s=" << e.s << " disc=" << e.discriminant << " xi^2=" << e.xi_squared
       << " Z_min^2=" << e.z_min_squared << "  " << (e.holds ? "holds" : "VIOLATED")
       << (e.complete ? "" : " (INCOMPLETE)") << "\n";
  }
  os << "violations: " << s.violations << ", incomplete: " << s.incomplete << "\n";
  return os.str();
}

MonomialVerifySummary run_monomial_verify(const MonomialVerifyOptions& opt) {
  MonomialVerifySummary summary;
  if (!opt.ideals.empty()) {
    MonomialVerifyEntry e;
    e.index = 0;
    e.d = static_cast<int>(opt.ideals.size());
    e.vars = opt.ideals[0].num_vars;
    ColengthLemmaResult r = verify_colength_lemma(opt.ideals, opt.volume_budget);
    e.lhs = r.lhs.get_str();
    e.rhs = r.rhs.get_str();
    e.margin = Int(r.lhs - r.rhs).get_str();
    e.holds = r.holds;
    e.strict = r.strict;
    if (opt.rays > 0) {
      RadialReport rr = radial_containment_check(opt.ideals, opt.rays, opt.seed);
      e.rays_checked = static_cast<int>(rr.samples.size());
      e.rays_passed = rr.passed;
    }
    summary.entries.push_back(std::move(e));
  } else {
    summary.entries.resize(opt.random_count);
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < opt.random_count; ++i) {
      try {
        uint64_t instance_seed = mix_seed(opt.seed, static_cast<uint64_t>(i));
        std::vector<MonomialIdeal> ideals;
        for (int k = 0; k < opt.d; ++k)
          ideals.push_back(random_m_primary(opt.vars, opt.max_exp, opt.density,
                                            mix_seed(instance_seed, static_cast<uint64_t>(k))));
        MonomialVerifyEntry& e = summary.entries[i];
        e.index = i;
        e.d = opt.d;
        e.vars = opt.vars;
        ColengthLemmaResult r = verify_colength_lemma(ideals, opt.volume_budget);
        e.lhs = r.lhs.get_str();
        e.rhs = r.rhs.get_str();
        e.margin = Int(r.lhs - r.rhs).get_str();
        e.holds = r.holds;
        e.strict = r.strict;
        if (opt.rays > 0) {
          RadialReport rr =
              radial_containment_check(ideals, opt.rays, mix_seed(instance_seed, 0x52a));
          e.rays_checked = static_cast<int>(rr.samples.size());
          e.rays_passed = rr.passed;
        }
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  summary.all_hold = true;
  for (const MonomialVerifyEntry& e : summary.entries)
    summary.all_hold = summary.all_hold && e.holds;
  return summary;
}

OrderedJson monomial_to_json(const MonomialVerifySummary& s) {
  OrderedJson j;
  j["scan"] = "colength-lemma";
  OrderedJson entries = OrderedJson::array();
  for (const MonomialVerifyEntry& e : s.entries) {
    OrderedJson je;
    je["index"] = e.index;
    je["d"] = e.d;
    je["vars"] = e.vars;
    je["lhs"] = e.lhs;
    je["rhs"] = e.rhs;
    je["margin"] = e.margin;
    je["holds"] = e.holds;
    je["strict"] = e.strict;
    je["rays_checked"] = e.rays_checked;
    je["rays_passed"] = e.rays_passed;
    entries.push_back(je);
  }
  j["entries"] = entries;
  j["all_hold"] = s.all_hold;
  return j;
}

std::string monomial_to_text(const MonomialVerifySummary& s) {
  std::ostringstream os;
  for (const MonomialVerifyEntry& e : s.entries) {
    os << "  #" << e.index << "  d=" << e.d << " e=" << e.vars << "  lhs=" << e.lhs
       << " rhs=" << e.rhs << " margin=" << e.margin << "  "
       << (e.strict ? "strict" : (e.holds ? "holds (equality)" : "VIOLATED"));
    if (e.rays_checked > 0) os << "  rays " << e.rays_passed << "/" << e.rays_checked;
    os << "\n";
  }
  os << (s.all_hold ? "all instances hold\n" : "VIOLATIONS FOUND\n");
  return os.str();
}

}  // namespace durfee
