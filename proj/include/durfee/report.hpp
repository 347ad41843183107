#ifndef DURFEE_REPORT_HPP
#define DURFEE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "durfee/bounds.hpp"
#include "durfee/monomial.hpp"
#include "durfee/search.hpp"

namespace durfee {

using OrderedJson = nlohmann::ordered_json;

struct AnalyzeOptions {
  std::optional<Int> p_g;
  int embedding_dim = 0;       // 0 = not supplied
  bool gorenstein = false;
  std::optional<Int> nu;       // overrides the Z_min proxy
  std::optional<Cycle> z_max;  // overrides the Z_min stand-in in the Z-bound
  std::optional<long> t;
  long long node_budget = kDefaultNodeBudget;
  int minimizer_cap = kDefaultMinimizerCap;
};

// Everything the analyze pipeline computes, in one value. Human-readable and
// JSON output are both rendered from this struct.
struct AnalysisReport {
  std::string graph_canonical;
  std::string graph_hash;
  int s = 0;

  Int discriminant;
  bool unimodular = false;
  Cycle z_k;
  bool numerically_gorenstein = false;
  bool du_val = false;
  Rat k_squared;
  Rat k2_plus_s;

  Cycle z_min;
  Rat z_min_squared;
  SearchResult min_chi;        // optimum_value = min chi
  Rat p_a;                     // 1 - min chi

  std::optional<ElkiesResult> elkies;  // unimodular lattices only
  CosetConjectureResult conjecture;

  // Durfee block (present when p_g was supplied).
  bool has_durfee = false;
  SmoothingData data;
  std::string pg_provenance;   // "user" / "family"
  std::string nu_provenance;   // "user" / "proxy" / "family"
  std::optional<SylvesterTriple> triple;  // when K^2+s is integral
  BoundReport bounds;

  std::vector<std::string> warnings;

  // True when every required search finished within its budget.
  bool complete = true;
};

AnalysisReport analyze_graph(const ResolutionGraph& g, const AnalyzeOptions& opt);

OrderedJson report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

// Batch scan of random graphs against the coset-search inequality
// xi^2 + s >= Z_min^2. Instances are evaluated concurrently but reported in
// index order, so output is deterministic for a fixed seed.
struct ConjectureScanOptions {
  int count = 0;
  int max_vertices = 6;
  uint64_t seed = 0;
  long long weight_min = -4;
  long long weight_max = -2;
  long long genus_min = 0;
  long long genus_max = 1;
  long long node_budget = kDefaultNodeBudget;
};
struct ConjectureScanEntry {
  int index = 0;
  std::string graph_hash;
  int s = 0;
  std::string discriminant;
  std::string xi;
  std::string xi_squared;
  std::string z_min_squared;
  bool holds = false;
  bool complete = true;
  long long nodes = 0;
  bool generated = true;  // false when rejection sampling ran out of retries
};
struct ConjectureScanSummary {
  ConjectureScanOptions options;
  std::vector<ConjectureScanEntry> entries;
  int violations = 0;
  int incomplete = 0;
};
ConjectureScanSummary run_conjecture_scan(const ConjectureScanOptions& opt);
OrderedJson scan_to_json(const ConjectureScanSummary& s);
std::string scan_to_text(const ConjectureScanSummary& s);

// Batch verification of the colength inequality (plus optional ray checks)
// on explicit or seeded random ideal families.
struct MonomialVerifyOptions {
  std::vector<MonomialIdeal> ideals;  // explicit instance when non-empty
  int random_count = 0;
  int vars = 2;
  int d = 2;
  long long max_exp = 3;
  uint64_t seed = 0;
  double density = 0.5;
  int rays = 0;
  long long volume_budget = 100000000;
};
struct MonomialVerifyEntry {
  int index = 0;
  int d = 0;
  int vars = 0;
  std::string lhs;
  std::string rhs;
  std::string margin;
  bool holds = false;
  bool strict = false;
  int rays_checked = 0;
  int rays_passed = 0;
};
struct MonomialVerifySummary {
  std::vector<MonomialVerifyEntry> entries;
  bool all_hold = false;
};
MonomialVerifySummary run_monomial_verify(const MonomialVerifyOptions& opt);
OrderedJson monomial_to_json(const MonomialVerifySummary& s);
std::string monomial_to_text(const MonomialVerifySummary& s);

}  // namespace durfee

#endif
