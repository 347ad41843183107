#ifndef DURFEE_EXACT_HPP
#define DURFEE_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace durfee {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx does not reduce num/den on construction; this does.
Rat make_rat(const Int& num, const Int& den);

Int int_of(long long v);
Rat rat_of(long long v);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);
// Nearest integer, halves rounded towards +infinity.
Int rat_round(const Rat& q);
Rat rat_frac(const Rat& q);  // q - floor(q), in [0,1)
bool rat_is_integer(const Rat& q);

// Canonical "p/q" string, plain "p" when integral.
std::string rat_str(const Rat& q);

Rat pow2_rat(long e);  // 2^e, e may be negative

// C(n,k); zero when n < k or n < 0.
Int binomial(const Int& n, unsigned k);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace durfee

#endif
