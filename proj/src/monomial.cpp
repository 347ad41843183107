#include "durfee/monomial.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "durfee/errors.hpp"
#include "durfee/rng.hpp"

namespace durfee {

namespace {

constexpr long long kMaxExponent = 1LL << 31;

bool dominates(const std::vector<long long>& u, const std::vector<long long>& v) {
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] < v[i]) return false;
  return true;
}

}  // namespace

bool MonomialIdeal::is_m_primary() const {
  for (int axis = 0; axis < num_vars; ++axis) {
    bool found = false;
    for (const auto& g : generators) {
      bool pure = g[axis] > 0;
      for (int j = 0; pure && j < num_vars; ++j)
        if (j != axis && g[j] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<long long> MonomialIdeal::pure_power_box() const {
  std::vector<long long> box(num_vars, 0);
  for (int axis = 0; axis < num_vars; ++axis) {
    for (const auto& g : generators) {
      bool pure = g[axis] > 0;
      for (int j = 0; pure && j < num_vars; ++j)
        if (j != axis && g[j] != 0) pure = false;
      if (pure && (box[axis] == 0 || g[axis] < box[axis])) box[axis] = g[axis];
    }
    if (box[axis] == 0)
      throw ValidationError("ideal is not m-primary: no pure power of variable " +
                            std::to_string(axis + 1));
  }
  return box;
}

bool MonomialIdeal::contains(const std::vector<long long>& u) const {
  for (const auto& g : generators)
    if (dominates(u, g)) return true;
  return false;
}

MonomialIdeal make_ideal(int num_vars, std::vector<std::vector<long long>> generators) {
  if (num_vars < 1) throw ValidationError("ideal: need at least one variable");
  if (generators.empty()) throw ValidationError("ideal: empty generator set");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != num_vars)
      throw ValidationError("ideal: generator dimension mismatch");
    bool all_zero = true;
    for (long long e : g) {
      if (e < 0) throw ValidationError("ideal: negative exponent");
      if (e > kMaxExponent) throw ValidationError("ideal: exponent out of supported range");
      if (e != 0) all_zero = false;
    }
    if (all_zero) throw ValidationError("ideal: the zero exponent vector generates the unit ideal");
  }
  // minimalize: drop generators dominating another
  std::vector<std::vector<long long>> min_gens;
  for (size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < generators.size() && !redundant; ++j) {
      if (i == j) continue;
      if (dominates(generators[i], generators[j]) &&
          !(generators[i] == generators[j] && i < j))
        redundant = true;
    }
    if (!redundant) min_gens.push_back(generators[i]);
  }
  std::sort(min_gens.begin(), min_gens.end());
  min_gens.erase(std::unique(min_gens.begin(), min_gens.end()), min_gens.end());
  MonomialIdeal a;
  a.num_vars = num_vars;
  a.generators = std::move(min_gens);
  return a;
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  int num_vars = 0;
  std::vector<std::vector<long long>> gens;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (num_vars == 0) {
      if (toks.size() != 2 || toks[0] != "vars")
        throw ParseError(line_no, "expected header 'vars <e>'");
      num_vars = std::atoi(toks[1].c_str());
      if (num_vars < 1) throw ParseError(line_no, "bad variable count '" + toks[1] + "'");
      continue;
    }
    if (static_cast<int>(toks.size()) != num_vars)
      throw ParseError(line_no, "generator needs " + std::to_string(num_vars) + " exponents");
    std::vector<long long> g;
    for (const std::string& t : toks) {
      errno = 0;
      char* end = nullptr;
      long long v = std::strtoll(t.c_str(), &end, 10);
      if (errno != 0 || end != t.c_str() + t.size())
        throw ParseError(line_no, "bad exponent '" + t + "'");
      g.push_back(v);
    }
    gens.push_back(std::move(g));
  }
  if (num_vars == 0) throw ParseError("missing 'vars <e>' header");
  return make_ideal(num_vars, std::move(gens));
}

std::string serialize_ideal(const MonomialIdeal& a) {
  std::ostringstream os;
  os << "vars " << a.num_vars << "\n";
  for (const auto& g : a.generators) {
    for (int j = 0; j < a.num_vars; ++j) os << (j ? " " : "") << g[j];
    os << "\n";
  }
  return os.str();
}

namespace {

struct CountBox {
  std::vector<long long> n;  // exclusive upper bounds
  unsigned long long volume = 0;
};

CountBox counting_box(const MonomialIdeal& a, long long volume_budget) {
  CountBox box;
  box.n = a.pure_power_box();
  Int vol(1);
  for (long long n : box.n) vol *= int_of(n);
  if (vol > int_of(volume_budget))
    throw BudgetError("colength: bounding box volume " + vol.get_str() + " exceeds budget " +
                      std::to_string(volume_budget));
  box.volume = static_cast<unsigned long long>(vol.get_ui());
  return box;
}

// Standard monomials in the sub-box where the first exponent runs over
// [first_lo, first_hi) and the rest over the full pure-power box.
unsigned long long count_standard_range(const MonomialIdeal& a, const CountBox& box,
                                        long long first_lo, long long first_hi) {
  const int e = a.num_vars;
  std::vector<long long> u(e, 0);
  u[0] = first_lo;
  unsigned long long count = 0;
  while (true) {
    if (!a.contains(u)) ++count;
    int c = e - 1;
    while (c > 0 && u[c] == box.n[c] - 1) {
      u[c] = 0;
      --c;
    }
    if (c == 0) {
      if (++u[0] >= first_hi) break;
    } else {
      ++u[c];
    }
  }
  return count;
}

}  // namespace

Int colength_serial(const MonomialIdeal& a, long long volume_budget) {
  CountBox box = counting_box(a, volume_budget);
  if (box.volume == 0) return 0;
  return Int(static_cast<unsigned long>(count_standard_range(a, box, 0, box.n[0])));
}

Int colength(const MonomialIdeal& a, long long volume_budget) {
  CountBox box = counting_box(a, volume_budget);
  if (box.volume == 0) return 0;
  const long long width = box.n[0];
  const int chunks = static_cast<int>(std::min<long long>(width, 4LL * omp_get_max_threads()));
  std::vector<unsigned long long> part(chunks, 0);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < chunks; ++c) {
    long long lo = width * c / chunks;
    long long hi = width * (c + 1) / chunks;
    part[c] = count_standard_range(a, box, lo, hi);
  }
  unsigned long long total = 0;
  for (unsigned long long p : part) total += p;
  return Int(static_cast<unsigned long>(total));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars != b.num_vars) throw ValidationError("ideal product: dimension mismatch");
  std::vector<std::vector<long long>> sums;
  sums.reserve(a.generators.size() * b.generators.size());
  for (const auto& u : a.generators)
    for (const auto& v : b.generators) {
      std::vector<long long> w(a.num_vars);
      for (int j = 0; j < a.num_vars; ++j) w[j] = u[j] + v[j];
      sums.push_back(std::move(w));
    }
  return make_ideal(a.num_vars, std::move(sums));
}

MonomialIdeal ideal_power(const MonomialIdeal& a, int d) {
  if (d < 1) throw ValidationError("ideal power: exponent must be >= 1");
  MonomialIdeal p = a;
  for (int k = 1; k < d; ++k) p = product(p, a);
  return p;
}

ColengthLemmaResult verify_colength_lemma(const std::vector<MonomialIdeal>& ideals,
                                          long long volume_budget) {
  if (ideals.empty()) throw ValidationError("colength lemma: need at least one ideal");
  const int e = ideals[0].num_vars;
  for (const MonomialIdeal& a : ideals)
    if (a.num_vars != e) throw ValidationError("colength lemma: dimension mismatch");
  const int d = static_cast<int>(ideals.size());

  Int sum(0);
  for (const MonomialIdeal& a : ideals) sum += colength(a, volume_budget);
  Int d_pow(1);
  for (int k = 1; k < e; ++k) d_pow *= d;

  MonomialIdeal prod = ideals[0];
  for (int k = 1; k < d; ++k) prod = product(prod, ideals[k]);

  ColengthLemmaResult r;
  r.lhs = d_pow * sum;
  r.rhs = colength(prod, volume_budget);
  r.holds = (r.lhs >= r.rhs);
  r.strict = (r.lhs > r.rhs);
  if (!r.holds)
    throw Error("internal: colength inequality violated (lhs " + r.lhs.get_str() + " < rhs " +
                r.rhs.get_str() + "); this is a proved theorem, so the count is buggy");
  if (d >= 2 && e >= 2 && !r.strict)
    throw Error("internal: colength inequality not strict for d >= 2, e >= 2");
  return r;
}

RayValue ray_entry(const MonomialIdeal& a, const std::vector<Rat>& theta) {
  if (static_cast<int>(theta.size()) != a.num_vars)
    throw ValidationError("ray entry: direction dimension mismatch");
  for (const Rat& t : theta)
    if (sgn(t) < 0) throw ValidationError("ray entry: direction must be nonnegative");
  RayValue best;
  best.infinite = true;
  for (const auto& g : a.generators) {
    bool feasible = true;
    Rat rho(0);
    for (int j = 0; j < a.num_vars; ++j) {
      if (g[j] == 0) continue;
      if (sgn(theta[j]) == 0) {
        feasible = false;  // this generator is unreachable along theta
        break;
      }
      Rat need = rat_of(g[j]) / theta[j];
      if (need > rho) rho = need;
    }
    if (!feasible) continue;
    if (best.infinite || rho < best.value) {
      best.infinite = false;
      best.value = rho;
    }
  }
  return best;
}

RadialReport radial_containment_check(const std::vector<MonomialIdeal>& ideals, int samples,
                                      uint64_t seed) {
  if (ideals.empty()) throw ValidationError("radial check: need at least one ideal");
  const int e = ideals[0].num_vars;
  const int d = static_cast<int>(ideals.size());
  for (const MonomialIdeal& a : ideals) {
    if (a.num_vars != e) throw ValidationError("radial check: dimension mismatch");
    a.pure_power_box();  // m-primary check
  }
  MonomialIdeal prod = ideals[0];
  for (int k = 1; k < d; ++k) prod = product(prod, ideals[k]);

  Int d_pow(1);
  for (int k = 1; k < e; ++k) d_pow *= d;

  RadialReport report;
  DetRng rng(seed);
  for (int n = 0; n < samples; ++n) {
    RaySample s;
    s.direction.resize(e);
    for (int j = 0; j < e; ++j)
      s.direction[j] = make_rat(int_of(rng.range(1, 8)), int_of(rng.range(1, 8)));
    s.sum_radius = 0;
    for (const MonomialIdeal& a : ideals) {
      RayValue rv = ray_entry(a, s.direction);
      if (rv.infinite) throw Error("internal: infinite entry radius on a positive direction");
      s.entry_radii.push_back(rv.value);
      s.sum_radius += rv.value;
    }
    // The staircases are closed, so already r(theta)*theta dominates a sum of
    // per-ideal entry points and lies in the product region; the sample also
    // checks the interior point at radius r(theta) + 1.
    {
      auto in_product = [&](const Rat& rho) {
        for (const auto& g : prod.generators) {
          bool dom = true;
          for (int j = 0; j < e && dom; ++j)
            if (rho * s.direction[j] < rat_of(g[j])) dom = false;
          if (dom) return true;
        }
        return false;
      };
      s.containment_ok = in_product(s.sum_radius) && in_product(s.sum_radius + 1);
    }
    // Hoelder step: d^(e-1) sum r_i^e >= (sum r_i)^e, exactly.
    {
      Rat lhs(0);
      for (const Rat& ri : s.entry_radii) {
        Rat p(1);
        for (int k = 0; k < e; ++k) p *= ri;
        lhs += p;
      }
      lhs *= Rat(d_pow);
      Rat rhs(1);
      for (int k = 0; k < e; ++k) rhs *= s.sum_radius;
      s.hoelder_ok = (lhs >= rhs);
    }
    if (s.containment_ok && s.hoelder_ok) ++report.passed;
    report.samples.push_back(std::move(s));
  }
  report.all_ok = (report.passed == samples);
  return report;
}

StrictnessWitness strictness_witness(const MonomialIdeal& a, int d) {
  if (a.num_vars < 2) throw ValidationError("strictness witness: need at least two variables");
  if (d < 2) throw ValidationError("strictness witness: need d >= 2");
  a.pure_power_box();  // m-primary check

  // a_min = least pure power of x1
  long long a_min = 0;
  for (const auto& g : a.generators) {
    bool pure = g[0] > 0;
    for (int j = 1; pure && j < a.num_vars; ++j)
      if (g[j] != 0) pure = false;
    if (pure && (a_min == 0 || g[0] < a_min)) a_min = g[0];
  }

  // smallest b such that x1^a' x2^b lies in the ideal for some a' < a_min,
  // then the smallest such a'. Only generators supported on {x1, x2} matter.
  StrictnessWitness w;
  long long best_b = -1, best_ap = -1;
  for (const auto& g : a.generators) {
    bool planar = true;
    for (int j = 2; j < a.num_vars; ++j)
      if (g[j] != 0) planar = false;
    if (!planar || g[0] >= a_min) continue;
    if (best_b < 0 || g[1] < best_b || (g[1] == best_b && g[0] < best_ap)) {
      best_b = g[1];
      best_ap = g[0];
    }
  }
  if (best_b < 0) {
    w.found = false;
    w.reason = "no generator with x1-exponent below " + std::to_string(a_min) +
               " on the x1x2-coordinate plane";
    return w;
  }
  w.found = true;
  w.a = a_min;
  w.a_prime = best_ap;
  w.b = best_b;
  w.v.assign(a.num_vars, 0);
  w.v[0] = static_cast<long long>(d - 1) * a_min + best_ap;
  w.v[1] = best_b;
  if (!ideal_power(a, d).contains(w.v))
    throw Error("internal: strictness witness does not lie in the power's staircase");
  return w;
}

MonomialIdeal random_m_primary(int num_vars, long long max_exp, double density, uint64_t seed) {
  if (num_vars < 1) throw ValidationError("random ideal: need at least one variable");
  if (max_exp < 1) throw ValidationError("random ideal: max exponent must be >= 1");
  DetRng rng(seed);
  std::vector<std::vector<long long>> gens;
  for (int j = 0; j < num_vars; ++j) {
    std::vector<long long> g(num_vars, 0);
    g[j] = rng.range(1, max_exp);
    gens.push_back(std::move(g));
  }
  int extra = static_cast<int>(density * 2 * num_vars);
  for (int k = 0; k < extra; ++k) {
    std::vector<long long> g(num_vars, 0);
    bool nonzero = false;
    for (int j = 0; j < num_vars; ++j) {
      g[j] = rng.range(0, max_exp);
      nonzero = nonzero || g[j] != 0;
    }
    if (nonzero) gens.push_back(std::move(g));
  }
  return make_ideal(num_vars, std::move(gens));
}

}  // namespace durfee
