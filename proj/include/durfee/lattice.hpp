#ifndef DURFEE_LATTICE_HPP
#define DURFEE_LATTICE_HPP

#include <string>
#include <vector>

#include "durfee/exact.hpp"
#include "durfee/graph.hpp"
#include "durfee/matrix.hpp"

namespace durfee {

// Element of L (x) Q, indexed by graph vertices. Integral coordinates mean
// membership in L itself.
struct Cycle {
  std::vector<Rat> coords;

  Cycle() = default;
  explicit Cycle(int dim) : coords(dim, Rat(0)) {}
  explicit Cycle(std::vector<Rat> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  const Rat& operator[](int i) const { return coords[i]; }
  Rat& operator[](int i) { return coords[i]; }
  bool operator==(const Cycle& o) const { return coords == o.coords; }

  bool is_integral() const;
  bool is_effective() const;  // all coordinates >= 0
  bool is_zero() const;
};

Cycle zero_cycle(int dim);
Cycle ones_cycle(int dim);

Cycle operator+(const Cycle& a, const Cycle& b);
Cycle operator-(const Cycle& a, const Cycle& b);
Cycle operator*(const Rat& c, const Cycle& a);

Cycle floor_cycle(const Cycle& a);  // coordinatewise floor
Cycle frac_cycle(const Cycle& a);   // coordinatewise fractional part

// a <= b coordinatewise.
bool cycle_leq(const Cycle& a, const Cycle& b);
bool cycle_lex_less(const Cycle& a, const Cycle& b);

std::vector<std::string> cycle_strings(const Cycle& a);
std::string cycle_str(const Cycle& a);  // "(c1, c2, ...)"
// Comma-separated rationals, e.g. "1,3/2,0".
Cycle parse_cycle(const std::string& text);

// Everything about the lattice that downstream searches and bounds need,
// computed once in exact arithmetic.
struct LatticeContext {
  ResolutionGraph graph;
  GramMatrix gram;
  int s = 0;                                  // vertex count
  Ldl ldl;                                    // of -Gram (positive definite)
  std::vector<std::vector<Rat>> gram_inverse;
  Int discriminant;                           // det(Gram)
  Cycle z_k;                                  // anticanonical cycle
  Cycle reduced_cycle;                        // E = sum of all exceptional curves
  std::vector<long long> adjunction_rhs;      // b_i = E_i^2 + 2 - 2g_i = (Z_K, E_i)
  Rat k_squared;                              // (Z_K, Z_K)
  Rat k2_plus_s;
  bool numerically_gorenstein = false;        // Z_K in L
  bool unimodular = false;                    // |det| = 1
  bool du_val = false;                        // Z_K = 0
  std::vector<std::string> warnings;
};

LatticeContext build_context(const ResolutionGraph& g);

// Intersection pairing a^T * Gram * b; throws on dimension mismatch.
Rat pairing(const LatticeContext& ctx, const Cycle& a, const Cycle& b);

// Riemann-Roch quadratic chi(l) = -(l, l - Z_K)/2.
Rat chi(const LatticeContext& ctx, const Cycle& l);

bool is_numerically_gorenstein(const LatticeContext& ctx);
bool is_unimodular(const LatticeContext& ctx);

// Parity decomposition of the anticanonical cycle:
//   x = 2{Z_K/2} (a reduced 0/1 cycle), x_bar = E - x, m = floor(Z_K/2),
// so that Z_K = 2m + x. Requires a numerically Gorenstein context.
struct ParityCycles {
  Cycle x;
  Cycle x_bar;
  Cycle m;
};
ParityCycles parity_decomposition(const LatticeContext& ctx);

}  // namespace durfee

#endif
