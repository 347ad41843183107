#include "durfee/lattice.hpp"

#include <sstream>

#include "durfee/errors.hpp"

namespace durfee {

bool Cycle::is_integral() const {
  for (const Rat& c : coords)
    if (!rat_is_integer(c)) return false;
  return true;
}

bool Cycle::is_effective() const {
  for (const Rat& c : coords)
    if (sgn(c) < 0) return false;
  return true;
}

bool Cycle::is_zero() const {
  for (const Rat& c : coords)
    if (sgn(c) != 0) return false;
  return true;
}

Cycle zero_cycle(int dim) { return Cycle(dim); }

Cycle ones_cycle(int dim) {
  Cycle c(dim);
  for (Rat& x : c.coords) x = 1;
  return c;
}

namespace {
void check_dims(const Cycle& a, const Cycle& b) {
  if (a.dim() != b.dim()) throw ValidationError("cycle dimension mismatch");
}
}  // namespace

Cycle operator+(const Cycle& a, const Cycle& b) {
  check_dims(a, b);
  Cycle r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

Cycle operator-(const Cycle& a, const Cycle& b) {
  check_dims(a, b);
  Cycle r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

Cycle operator*(const Rat& c, const Cycle& a) {
  Cycle r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = c * a[i];
  return r;
}

Cycle floor_cycle(const Cycle& a) {
  Cycle r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = Rat(rat_floor(a[i]));
  return r;
}

Cycle frac_cycle(const Cycle& a) {
  Cycle r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = rat_frac(a[i]);
  return r;
}

bool cycle_leq(const Cycle& a, const Cycle& b) {
  check_dims(a, b);
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool cycle_lex_less(const Cycle& a, const Cycle& b) {
  check_dims(a, b);
  for (int i = 0; i < a.dim(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<std::string> cycle_strings(const Cycle& a) {
  std::vector<std::string> out;
  out.reserve(a.dim());
  for (const Rat& c : a.coords) out.push_back(rat_str(c));
  return out;
}

std::string cycle_str(const Cycle& a) { return "(" + join(cycle_strings(a), ", ") + ")"; }

Cycle parse_cycle(const std::string& text) {
  std::vector<Rat> coords;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    // strip blanks
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty cycle coordinate in '" + text + "'");
    item = item.substr(b, e - b + 1);
    Rat q;
    if (q.set_str(item, 10) != 0)
      throw ParseError("bad cycle coordinate '" + item + "' (expected integer or p/q)");
    q.canonicalize();
    coords.push_back(q);
  }
  if (coords.empty()) throw ParseError("empty cycle '" + text + "'");
  return Cycle(std::move(coords));
}

LatticeContext build_context(const ResolutionGraph& g) {
  LatticeContext ctx;
  ctx.graph = g;
  ctx.warnings = g.warnings;
  ctx.gram = intersection_matrix(g);
  ctx.s = g.vertex_count();
  ctx.ldl = ldl_of_neg_gram(ctx.gram);  // throws unless negative definite
  ctx.discriminant = gram_determinant(ctx.gram, ctx.ldl);
  ctx.gram_inverse = gram_inverse(ctx.gram, ctx.ldl);

  ctx.adjunction_rhs.resize(ctx.s);
  std::vector<Rat> neg_b(ctx.s);
  for (int i = 0; i < ctx.s; ++i) {
    ctx.adjunction_rhs[i] = g.vertices[i].self_intersection + 2 - 2 * g.vertices[i].genus;
    neg_b[i] = rat_of(-ctx.adjunction_rhs[i]);
  }
  // Gram * z = b  <=>  (-Gram) * z = -b
  ctx.z_k = Cycle(ldl_solve(ctx.ldl, neg_b));
  ctx.reduced_cycle = ones_cycle(ctx.s);

  // (Z_K, Z_K) = z^T Gram z = z . b since Gram z = b.
  ctx.k_squared = 0;
  for (int i = 0; i < ctx.s; ++i) ctx.k_squared += ctx.z_k[i] * rat_of(ctx.adjunction_rhs[i]);
  ctx.k2_plus_s = ctx.k_squared + ctx.s;

  ctx.numerically_gorenstein = ctx.z_k.is_integral();
  Int abs_disc;
  mpz_abs(abs_disc.get_mpz_t(), ctx.discriminant.get_mpz_t());
  ctx.unimodular = (abs_disc == 1);
  ctx.du_val = ctx.z_k.is_zero();

  if (!ctx.z_k.is_effective())
    ctx.warnings.push_back("anticanonical cycle Z_K is not effective (Z_K = " +
                           cycle_str(ctx.z_k) + "); input is not a minimal resolution");
  return ctx;
}

Rat pairing(const LatticeContext& ctx, const Cycle& a, const Cycle& b) {
  if (a.dim() != ctx.s || b.dim() != ctx.s) throw ValidationError("cycle dimension mismatch");
  Rat total(0);
  for (int i = 0; i < ctx.s; ++i) {
    if (sgn(a[i]) == 0) continue;
    Rat row(0);
    for (int j = 0; j < ctx.s; ++j) {
      long long gij = ctx.gram.at(i, j);
      if (gij != 0) row += rat_of(gij) * b[j];
    }
    total += a[i] * row;
  }
  return total;
}

Rat chi(const LatticeContext& ctx, const Cycle& l) {
  return -pairing(ctx, l, l - ctx.z_k) / 2;
}

bool is_numerically_gorenstein(const LatticeContext& ctx) { return ctx.numerically_gorenstein; }

bool is_unimodular(const LatticeContext& ctx) { return ctx.unimodular; }

ParityCycles parity_decomposition(const LatticeContext& ctx) {
  if (!ctx.numerically_gorenstein)
    throw ValidationError("parity decomposition needs a numerically Gorenstein lattice (Z_K = " +
                          cycle_str(ctx.z_k) + " is not integral)");
  ParityCycles p;
  Cycle half = Rat(1, 2) * ctx.z_k;
  p.m = floor_cycle(half);
  p.x = Rat(2) * frac_cycle(half);
  p.x_bar = ctx.reduced_cycle - p.x;
  for (int i = 0; i < ctx.s; ++i)
    if (!(p.x[i] == 0 || p.x[i] == 1) || !rat_is_integer(p.m[i]))
      throw Error("internal: parity decomposition not 0/1-integral");
  return p;
}

}  // namespace durfee
