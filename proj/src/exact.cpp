#include "durfee/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace durfee {

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int int_of(long long v) { return Int(static_cast<long>(v)); }

Rat rat_of(long long v) { return Rat(int_of(v)); }

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int rat_round(const Rat& q) { return rat_floor(q + Rat(1, 2)); }

Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat pow2_rat(long e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rat(p) : make_rat(1, p);
}

Int binomial(const Int& n, unsigned k) {
  if (sgn(n) < 0 || n < static_cast<long>(k)) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << sep;
    os << parts[i];
  }
  return os.str();
}

}  // namespace durfee
