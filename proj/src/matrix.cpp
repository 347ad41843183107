#include "durfee/matrix.hpp"

#include "durfee/errors.hpp"

namespace durfee {

namespace {

// Shared LDL driver over A = -G. Stops at the first nonpositive pivot and
// reports its index; pivots d_k equal minor_k(A)/minor_{k-1}(A), so the first
// bad pivot is exactly the first leading principal minor of G whose sign is
// not (-1)^k.
struct LdlAttempt {
  Ldl f;
  bool ok = false;
  int failing_k = 0;  // 1-based
};

LdlAttempt try_ldl(const GramMatrix& g) {
  const int n = g.n;
  LdlAttempt a;
  a.f.n = n;
  a.f.lower.assign(static_cast<size_t>(n) * n, Rat(0));
  a.f.diag.assign(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    Rat d = rat_of(-g.at(j, j));
    for (int k = 0; k < j; ++k) d -= a.f.l(j, k) * a.f.l(j, k) * a.f.diag[k];
    if (sgn(d) <= 0) {
      a.ok = false;
      a.failing_k = j + 1;
      a.f.diag[j] = d;
      return a;
    }
    a.f.diag[j] = d;
    a.f.lower[static_cast<size_t>(j) * n + j] = 1;
    for (int i = j + 1; i < n; ++i) {
      Rat v = rat_of(-g.at(i, j));
      for (int k = 0; k < j; ++k) v -= a.f.l(i, k) * a.f.l(j, k) * a.f.diag[k];
      a.f.lower[static_cast<size_t>(i) * n + j] = v / d;
    }
  }
  a.ok = true;
  return a;
}

}  // namespace

NegDefiniteResult check_negative_definite(const GramMatrix& g) {
  NegDefiniteResult r;
  LdlAttempt a = try_ldl(g);
  if (a.ok) {
    r.negative_definite = true;
    return r;
  }
  r.negative_definite = false;
  r.failing_k = a.failing_k;
  // Witness: solve L^T w = e_k on the leading (k x k) block, then
  // w^T (-G) w = d_k <= 0, i.e. (w, Gw) >= 0. Clear denominators.
  const int k = a.failing_k - 1;
  std::vector<Rat> w(g.n, Rat(0));
  w[k] = 1;
  for (int i = k - 1; i >= 0; --i) {
    Rat s(0);
    for (int j = i + 1; j <= k; ++j) s += a.f.l(j, i) * w[j];
    w[i] = -s;
  }
  Int den(1);
  for (int i = 0; i <= k; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w[i].get_den_mpz_t());
  r.witness.assign(g.n, Int(0));
  for (int i = 0; i <= k; ++i) {
    Rat scaled = w[i] * Rat(den);
    r.witness[i] = scaled.get_num();
  }
  return r;
}

Ldl ldl_of_neg_gram(const GramMatrix& g) {
  LdlAttempt a = try_ldl(g);
  if (!a.ok)
    throw ValidationError("intersection form is not negative definite (leading minor " +
                          std::to_string(a.failing_k) + ")");
  return a.f;
}

std::vector<Rat> ldl_solve(const Ldl& f, const std::vector<Rat>& rhs) {
  const int n = f.n;
  std::vector<Rat> y(rhs);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) y[i] -= f.l(i, j) * y[j];
  for (int i = 0; i < n; ++i) y[i] /= f.diag[i];
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j) y[i] -= f.l(j, i) * y[j];
  return y;
}

Int gram_determinant(const GramMatrix& g, const Ldl& f) {
  Rat det(1);
  for (const Rat& d : f.diag) det *= d;
  if (g.n % 2 != 0) det = -det;
  if (!rat_is_integer(det)) throw Error("internal: non-integer determinant");
  return det.get_num();
}

std::vector<std::vector<Rat>> gram_inverse(const GramMatrix& g, const Ldl& f) {
  const int n = g.n;
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (int c = 0; c < n; ++c) {
    std::vector<Rat> e(n, Rat(0));
    e[c] = 1;
    std::vector<Rat> x = ldl_solve(f, e);  // (-G) x = e_c
    for (int r = 0; r < n; ++r) inv[r][c] = -x[r];
  }
  return inv;
}

}  // namespace durfee
