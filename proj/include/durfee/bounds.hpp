#ifndef DURFEE_BOUNDS_HPP
#define DURFEE_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "durfee/lattice.hpp"

namespace durfee {

// Analytic smoothing inputs paired with the graph-side invariants. p_g,
// embedding dimension and the Gorenstein flag come from the user (or a
// built-in family); mu0 and K^2+s come from the graph.
struct SmoothingData {
  std::optional<Int> p_g;
  Int mu0;                         // b1 of the link, from the graph
  std::optional<Int> k2_plus_s;    // integral only for numerically Gorenstein input
  int embedding_dim = 0;           // e >= 3 when known, 0 = not supplied
  int epsilon = 0;                 // 1 iff Gorenstein
  std::optional<Int> nu;           // multiplicity
  bool nu_is_proxy = false;        // nu = -(Z_min)^2 stand-in for the maximal cycle
  std::optional<long> t;           // parameter of the t-family bound (default e-eps-3)
};

struct SylvesterTriple {
  Int mu;
  Int sigma;
  Int mu_plus;
  Int mu_minus;
  bool realizable = true;  // false when mu_plus or mu_minus is negative
};

// mu = 12 p_g + (K^2+s) - mu0 and -sigma = 8 p_g + (K^2+s), with the
// Sylvester triple mu_plus = 2 p_g - mu0, mu_minus = mu - mu0 - mu_plus.
// Both sigma routes agree identically; asserted.
SylvesterTriple smoothing_invariants(const Int& p_g, const Int& mu0, const Int& k2_plus_s);

// Durfee-relation route for non-Gorenstein data: sigma = 4 p_g - mu0 - mu.
Int sigma_from_durfee(const Int& p_g, const Int& mu, const Int& mu0);

struct BoundRow {
  std::string id;
  std::string description;
  std::optional<Rat> lhs;  // oriented so that the bound reads lhs >= rhs
  std::optional<Rat> rhs;
  std::optional<Rat> margin;  // lhs - rhs
  bool holds = false;         // meaningful only when evaluated
  bool applicable = true;     // false when assumptions or inputs are missing
  std::vector<std::string> assumptions_violated;
  std::vector<std::string> notes;
};

struct BoundReport {
  std::vector<BoundRow> rows;

  const BoundRow* find(const std::string& id) const;
};

// The cycle standing in for Z_max in the Z-dependent bounds.
struct ZCycleInput {
  Cycle z;
  bool is_proxy = true;  // true when Z_min is used as a stand-in for Z_max
};

// Evaluates every signature bound row (B1..B13 plus the B5 identity) with
// exact rational margins. Rows whose assumptions fail are reported
// not-applicable, never violated.
BoundReport evaluate_bounds(const LatticeContext& ctx, const SmoothingData& data,
                            const std::optional<Rat>& min_chi,
                            const std::optional<ZCycleInput>& z_input);

// The weak inequality 4 p_g <= mu + mu0 (equivalently sigma <= 0) as a
// standalone row, for data with no graph attached.
BoundRow weak_inequality_row(const Int& p_g, const Int& mu, const Int& mu0);

// Homogeneous ICIS of multidegree (d_1, ..., d_r): nu = prod d_i and the
// closed form for p_g / nu; for equal degrees also mu and the coefficient
// inequalities.
struct HomogeneousIcis {
  std::vector<long long> degrees;
  int r = 0;
  int e = 0;  // r + 2
  Int nu;
  Int p_g;
  std::optional<Int> mu;                  // equal degrees only
  std::optional<Int> mu_plus_1_minus_nu;  // mu + 1 - nu
  bool six_pg_identity = false;           // r = 1: 6 p_g = mu + 1 - nu
  bool weak_holds = false;                // 4 p_g <= mu + 1 - nu
  std::optional<Rat> refined_coefficient;
  std::optional<bool> refined_holds;
};
HomogeneousIcis homogeneous_icis(const std::vector<long long>& degrees);

// The degree-d cone: single vertex (-d, genus (d-1)(d-2)/2) with everything
// internal: p_g = C(d,3), nu = d, e = 3, Gorenstein. Asserts mu = (d-1)^3.
struct ConeSingularity {
  ResolutionGraph graph;
  SmoothingData data;
  SylvesterTriple triple;
};
ConeSingularity cone_singularity(long long d);

// Equal-degree table for fixed codimension r: nu, p_g, mu and the symbolic
// lower bound "-sigma >= nu - 1 - mu0" per degree.
struct StrictIcisRow {
  long long d = 0;
  Int nu;
  Int p_g;
  Int mu;
  Int nu_minus_1;
  std::string bound;  // "nu-1-mu0" with nu-1 inlined
};
std::vector<StrictIcisRow> strict_icis_asymptotics(int r, long long d_max);

}  // namespace durfee

#endif
