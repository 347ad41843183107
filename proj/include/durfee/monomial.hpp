#ifndef DURFEE_MONOMIAL_HPP
#define DURFEE_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "durfee/exact.hpp"

namespace durfee {

// m-primary monomial ideal given by its minimal generators' exponent vectors.
struct MonomialIdeal {
  int num_vars = 0;
  std::vector<std::vector<long long>> generators;  // minimalized, sorted

  bool is_m_primary() const;
  // Minimal pure-power exponent per axis; only defined when m-primary.
  std::vector<long long> pure_power_box() const;
  // x^u in the ideal, i.e. u dominates some generator.
  bool contains(const std::vector<long long>& u) const;
};

// Minimalizes the generator set (drops any generator dominating another).
// Rejects empty input, the unit ideal and dimension mismatches.
MonomialIdeal make_ideal(int num_vars, std::vector<std::vector<long long>> generators);

// Parses the ideal file format: first line "vars <e>", then one generator of
// e space-separated nonnegative integers per line; '#' comments allowed.
MonomialIdeal parse_ideal(const std::string& text);
std::string serialize_ideal(const MonomialIdeal& a);

// Number of standard monomials: lattice points u >= 0 dominating no
// generator. Counted by scanning the pure-power bounding box; throws
// BudgetError when the box volume exceeds the budget, ValidationError when
// the ideal is not m-primary. The _serial variant is the reference the
// OpenMP kernel is tested against.
Int colength(const MonomialIdeal& a, long long volume_budget = 100000000);
Int colength_serial(const MonomialIdeal& a, long long volume_budget = 100000000);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, int d);

// d^(e-1) sum(colength(a_i)) >= colength(prod a_i), strict when d >= 2 and
// e >= 2. Throws on violation: the inequality is a theorem, so failing it
// means a counting bug.
struct ColengthLemmaResult {
  Int lhs;
  Int rhs;
  bool holds = false;
  bool strict = false;
};
ColengthLemmaResult verify_colength_lemma(const std::vector<MonomialIdeal>& ideals,
                                          long long volume_budget = 100000000);

// Entry radius of the staircase region along direction theta > 0:
// min over generators u of max_{u_j > 0} u_j / theta_j, i.e. the least rho
// with rho*theta coordinatewise above some generator. Infinite when theta
// vanishes on the support of every generator.
struct RayValue {
  bool infinite = false;
  Rat value;
};
RayValue ray_entry(const MonomialIdeal& a, const std::vector<Rat>& theta);

// Per-direction check of the radial-sum geometry: with r(theta) = sum of the
// per-ideal entry radii, the point (r(theta)+1)*theta lies in the product's
// staircase region, and d^(e-1) sum r_i^e >= (sum r_i)^e exactly.
struct RaySample {
  std::vector<Rat> direction;
  std::vector<Rat> entry_radii;
  Rat sum_radius;
  bool containment_ok = false;
  bool hoelder_ok = false;
};
struct RadialReport {
  std::vector<RaySample> samples;
  int passed = 0;
  bool all_ok = false;
};
RadialReport radial_containment_check(const std::vector<MonomialIdeal>& ideals, int samples,
                                      uint64_t seed);

// Strictness construction for a^d: with a = min pure power of x1 and (a',b)
// minimal with x1^a' x2^b in the ideal and a' < a, the vector
// v = ((d-1)a + a', b, 0, ..., 0) lies in the staircase of a^d.
struct StrictnessWitness {
  bool found = false;
  std::vector<long long> v;
  long long a = 0, a_prime = 0, b = 0;
  std::string reason;  // set when not found
};
StrictnessWitness strictness_witness(const MonomialIdeal& a, int d);

// Pure powers x_j^(n_j) with n_j uniform in [1, max_exp], plus
// floor(density * 2e) extra random generators; minimalized, deterministic
// per seed.
MonomialIdeal random_m_primary(int num_vars, long long max_exp, double density, uint64_t seed);

}  // namespace durfee

#endif
