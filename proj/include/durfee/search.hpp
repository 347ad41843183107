#ifndef DURFEE_SEARCH_HPP
#define DURFEE_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "durfee/lattice.hpp"

namespace durfee {

inline constexpr long long kDefaultNodeBudget = 10000000;     // enumeration nodes
inline constexpr long long kDefaultBoxBudget = 100000000;     // box-scan points
inline constexpr int kDefaultMinimizerCap = 32;

// Closest-vector search over the shifted lattice {shift + scale*l : l in L}
// for the positive-definite norm q(v) = -(v, v), minimizing q(x - target).
// shift may be rational (a dual-lattice coset), target is any rational cycle.
struct CosetCvpProblem {
  const LatticeContext* ctx = nullptr;
  Cycle target;
  Cycle shift;
  long scale = 1;
  long long node_budget = kDefaultNodeBudget;
  int minimizer_cap = kDefaultMinimizerCap;
};

struct SearchResult {
  Rat optimum_value;
  std::vector<Cycle> minimizers;   // up to the cap, in discovery/lex order
  Cycle canonical;                 // lexicographically smallest optimum
  long long minimizer_count = 0;   // all optima, not capped
  long long nodes_visited = 0;
  bool complete = true;            // false when the node budget ran out
};

// Exact branch-and-bound enumeration over the LDL decomposition of -Gram.
// The first leaf is the greedy (Babai) rounding of the target, which seeds
// the pruning radius. Returns the global optimum with every optimal point
// (capped), or best-so-far with complete=false when the budget is exhausted.
SearchResult solve_coset_cvp(const CosetCvpProblem& p);

// min chi over L, via CVP with target Z_K/2: result.optimum_value is
// min chi itself and the minimizers are the optimal cycles l in L.
SearchResult minimize_chi(const LatticeContext& ctx,
                          long long node_budget = kDefaultNodeBudget,
                          int minimizer_cap = kDefaultMinimizerCap);

// Exhaustive scan of the integral cycles in [ceil(box_low), floor(box_high)].
// Throws BudgetError when the box volume exceeds the budget. The _serial
// variant is the reference implementation the OpenMP one is tested against.
SearchResult brute_force_min_chi(const LatticeContext& ctx, const Cycle& box_low,
                                 const Cycle& box_high,
                                 long long volume_budget = kDefaultBoxBudget,
                                 int minimizer_cap = kDefaultMinimizerCap);
SearchResult brute_force_min_chi_serial(const LatticeContext& ctx, const Cycle& box_low,
                                        const Cycle& box_high,
                                        long long volume_budget = kDefaultBoxBudget,
                                        int minimizer_cap = kDefaultMinimizerCap);

// All effective integral cycles z in the box with (z, E_i) <= 0 for every i
// (anti-nef cycles). Brute-force oracle used to certify artin_cycle.
std::vector<Cycle> anti_nef_cycles_in_box(const LatticeContext& ctx, const Cycle& box_low,
                                          const Cycle& box_high,
                                          long long volume_budget = kDefaultBoxBudget);

// Laufer's iteration: start from the reduced cycle E and repeatedly add the
// lowest-index E_j with (z, E_j) > 0. Yields the Artin (minimal) cycle.
Cycle artin_cycle(const LatticeContext& ctx);

// An integral xi0 with (xi0, E_i) = (E_i, E_i) mod 2 for all i, found by a
// mod-2 linear solve. The full characteristic set is xi0 + 2L. Requires a
// unimodular lattice (Gram invertible mod 2).
Cycle characteristic_base(const LatticeContext& ctx);

// Verifies (xi, E_i) = (E_i, E_i) mod 2 for all i.
bool is_characteristic(const LatticeContext& ctx, const Cycle& xi);

// Characteristic element of maximal square (minimal norm) over xi0 + 2L.
// slack = xi^2 + s is >= 0 by Elkies's theorem.
struct ElkiesResult {
  Cycle xi;
  Rat xi_squared;
  Rat slack;
  SearchResult search;
};
ElkiesResult elkies_min_square(const LatticeContext& ctx,
                               long long node_budget = kDefaultNodeBudget);

// Maximal xi^2 over the coset Z_K + 2L (so Z_K - xi in 2L), compared against
// Z_min^2: holds iff xi^2 + s >= Z_min^2.
struct CosetConjectureResult {
  Cycle xi;
  Rat xi_squared;
  Cycle z_min;
  Rat z_min_squared;
  bool holds = false;
  SearchResult search;
};
CosetConjectureResult check_coset_conjecture(const LatticeContext& ctx,
                                      long long node_budget = kDefaultNodeBudget);

}  // namespace durfee

#endif
