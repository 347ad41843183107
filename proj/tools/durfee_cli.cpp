#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "durfee/errors.hpp"
#include "durfee/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;
constexpr int kExitViolation = 3;

std::string read_file(const std::string& path) {
  std::ifstream ifs(path, std::ios::binary);
  if (!ifs) throw durfee::ValidationError("cannot open '" + path + "'");
  std::ostringstream os;
  os << ifs.rdbuf();
  return os.str();
}

long long default_node_budget() {
  if (const char* env = std::getenv("DURFEE_NODE_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return durfee::kDefaultNodeBudget;
}

struct AnalyzeArgs {
  std::string graph_file;
  long long pg = -1;
  int e = 0;
  bool gorenstein = false;
  long long nu = -1;
  std::string zmax;
  long long t = LLONG_MIN;
  bool json = false;
  long long budget = 0;
};

int run_analyze(const AnalyzeArgs& a) {
  durfee::ResolutionGraph g = durfee::parse_resolution_graph(read_file(a.graph_file));
  durfee::AnalyzeOptions opt;
  if (a.pg >= 0) opt.p_g = durfee::int_of(a.pg);
  opt.embedding_dim = a.e;
  opt.gorenstein = a.gorenstein;
  if (a.nu >= 0) opt.nu = durfee::int_of(a.nu);
  if (!a.zmax.empty()) opt.z_max = durfee::parse_cycle(a.zmax);
  if (a.t != LLONG_MIN) opt.t = static_cast<long>(a.t);
  opt.node_budget = a.budget > 0 ? a.budget : default_node_budget();

  durfee::AnalysisReport report = durfee::analyze_graph(g, opt);
  if (a.json)
    std::cout << durfee::report_to_json(report).dump(2) << "\n";
  else
    std::cout << durfee::report_to_text(report);
  if (!report.complete) {
    std::cerr << "error: a required search exhausted its node budget (" << opt.node_budget
              << "); raise --budget or DURFEE_NODE_BUDGET\n";
    return kExitInternal;
  }
  return kExitOk;
}

struct GenerateArgs {
  std::string family;
  int n = 3;
  long long w = -2;
  long long d = 2;
  long long center_w = -2;
  long long center_g = 0;
  std::string arms;
  long long wmin = -4, wmax = -2, gmin = 0, gmax = 0;
  uint64_t seed = 1;
  std::string out;
};

std::vector<durfee::StarArm> parse_arms(const std::string& text) {
  std::vector<durfee::StarArm> arms;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw durfee::ValidationError("bad arm '" + item + "', expected <length>:<weight>");
    durfee::StarArm arm;
    arm.length = std::atoi(item.substr(0, colon).c_str());
    arm.weight = std::atoll(item.substr(colon + 1).c_str());
    arms.push_back(arm);
  }
  if (arms.empty()) throw durfee::ValidationError("star family needs at least one arm");
  return arms;
}

int run_generate(const GenerateArgs& a) {
  durfee::ResolutionGraph g;
  if (a.family == "chain") {
    g = durfee::make_chain(a.n, a.w);
  } else if (a.family == "star") {
    g = durfee::make_star(a.center_w, a.center_g, parse_arms(a.arms));
  } else if (a.family == "cone") {
    g = durfee::make_cone(a.d);
  } else if (a.family == "random") {
    g = durfee::make_random(a.n, a.wmin, a.wmax, a.gmin, a.gmax, a.seed);
  } else {
    throw durfee::ValidationError("unknown family '" + a.family +
                                  "' (chain, star, cone, random)");
  }
  std::string text = durfee::serialize_resolution_graph(g);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream ofs(a.out, std::ios::binary | std::ios::trunc);
    if (!ofs) throw durfee::ValidationError("cannot write '" + a.out + "'");
    ofs << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice invariants and signature bounds of resolution graphs"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  CLI::App* analyze = app.add_subcommand("analyze", "full report for one graph file");
  analyze->add_option("graph-file", an.graph_file, "graph file")->required();
  analyze->add_option("--pg", an.pg, "geometric genus (enables the bound rows)");
  analyze->add_option("--e", an.e, "embedding dimension (>= 3)");
  analyze->add_flag("--gorenstein", an.gorenstein, "the singularity is Gorenstein");
  analyze->add_option("--nu", an.nu, "multiplicity (default: -(Z_min)^2 proxy)");
  analyze->add_option("--zmax", an.zmax, "maximal cycle as comma-separated coordinates");
  analyze->add_option("--t", an.t, "parameter of the t-family bound");
  analyze->add_flag("--json", an.json, "emit JSON");
  analyze->add_option("--budget", an.budget, "enumeration node budget");

  durfee::ConjectureScanOptions sc;
  bool scan_json = false;
  bool fail_on_violation = false;
  long long scan_budget = 0;
  CLI::App* scan = app.add_subcommand("conjecture-scan",
                                      "random graphs against xi^2 + s >= Z_min^2");
  scan->add_option("--count", sc.count, "number of instances")->required();
  scan->add_option("--max-vertices", sc.max_vertices, "vertex cap per graph");
  scan->add_option("--seed", sc.seed, "scan seed")->required();
  scan->add_option("--wmin", sc.weight_min, "minimum self-intersection");
  scan->add_option("--wmax", sc.weight_max, "maximum self-intersection");
  scan->add_option("--gmin", sc.genus_min, "minimum genus");
  scan->add_option("--gmax", sc.genus_max, "maximum genus");
  scan->add_option("--budget", scan_budget, "enumeration node budget");
  scan->add_flag("--json", scan_json, "emit JSON");
  scan->add_flag("--fail-on-violation", fail_on_violation, "exit 3 when a violation is found");

  durfee::MonomialVerifyOptions mv;
  std::vector<std::string> ideal_files;
  bool mv_random = false;
  bool mv_json = false;
  CLI::App* mono = app.add_subcommand("monomial-verify", "colength inequality instances");
  mono->add_option("--ideal", ideal_files, "ideal file (repeatable)");
  mono->add_flag("--random", mv_random, "seeded random instances");
  mono->add_option("--vars", mv.vars, "number of variables (random mode)");
  mono->add_option("--count", mv.random_count, "number of random instances");
  mono->add_option("--d", mv.d, "ideals per instance (random mode)");
  mono->add_option("--max-exp", mv.max_exp, "maximum generator exponent (random mode)");
  mono->add_option("--seed", mv.seed, "random seed");
  mono->add_option("--rays", mv.rays, "radial-geometry samples per instance");
  mono->add_option("--budget", mv.volume_budget, "counting budget (box points)");
  mono->add_flag("--json", mv_json, "emit JSON");

  GenerateArgs ga;
  CLI::App* gen = app.add_subcommand("generate", "write a family graph file");
  gen->add_option("--family", ga.family, "chain | star | cone | random")->required();
  gen->add_option("--n", ga.n, "vertex count (chain, random)");
  gen->add_option("--w", ga.w, "self-intersection (chain)");
  gen->add_option("--d", ga.d, "degree (cone)");
  gen->add_option("--center-w", ga.center_w, "center self-intersection (star)");
  gen->add_option("--center-g", ga.center_g, "center genus (star)");
  gen->add_option("--arms", ga.arms, "star arms as <len>:<weight>,... (star)");
  gen->add_option("--wmin", ga.wmin, "minimum self-intersection (random)");
  gen->add_option("--wmax", ga.wmax, "maximum self-intersection (random)");
  gen->add_option("--gmin", ga.gmin, "minimum genus (random)");
  gen->add_option("--gmax", ga.gmax, "maximum genus (random)");
  gen->add_option("--seed", ga.seed, "seed (random)");
  gen->add_option("--out", ga.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return run_analyze(an);
    if (*scan) {
      if (sc.count < 0) throw durfee::ValidationError("--count must be nonnegative");
      sc.node_budget = scan_budget > 0 ? scan_budget : default_node_budget();
      durfee::ConjectureScanSummary s = durfee::run_conjecture_scan(sc);
      if (scan_json)
        std::cout << durfee::scan_to_json(s).dump(2) << "\n";
      else
        std::cout << durfee::scan_to_text(s);
      if (s.violations > 0 && fail_on_violation) return kExitViolation;
      return kExitOk;
    }
    if (*mono) {
      if (!mv_random && ideal_files.empty())
        throw durfee::ValidationError("pass --ideal files or --random");
      for (const std::string& f : ideal_files)
        mv.ideals.push_back(durfee::parse_ideal(read_file(f)));
      durfee::MonomialVerifySummary s = durfee::run_monomial_verify(mv);
      if (mv_json)
        std::cout << durfee::monomial_to_json(s).dump(2) << "\n";
      else
        std::cout << durfee::monomial_to_text(s);
      return kExitOk;
    }
    if (*gen) return run_generate(ga);
  } catch (const durfee::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const durfee::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const durfee::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
