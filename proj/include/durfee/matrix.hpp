#ifndef DURFEE_MATRIX_HPP
#define DURFEE_MATRIX_HPP

#include <vector>

#include "durfee/exact.hpp"
#include "durfee/graph.hpp"

namespace durfee {

// Exact LDL^T decomposition of A = -G for a negative-definite Gram matrix G.
// A is positive definite, so every pivot is a positive rational.
struct Ldl {
  int n = 0;
  std::vector<Rat> lower;  // row-major unit lower triangle (diagonal implied 1)
  std::vector<Rat> diag;

  const Rat& l(int i, int j) const { return lower[static_cast<size_t>(i) * n + j]; }
};

// Throws ValidationError if G is not negative definite.
Ldl ldl_of_neg_gram(const GramMatrix& g);

// Solves (-G) x = rhs.
std::vector<Rat> ldl_solve(const Ldl& f, const std::vector<Rat>& rhs);

// det(G) = (-1)^n * prod(pivots); exact integer.
Int gram_determinant(const GramMatrix& g, const Ldl& f);

// Exact inverse of G itself (not of -G).
std::vector<std::vector<Rat>> gram_inverse(const GramMatrix& g, const Ldl& f);

}  // namespace durfee

#endif
