#include "durfee/search.hpp"

#include <omp.h>

#include <algorithm>

#include "durfee/errors.hpp"

namespace durfee {

namespace {

bool lex_less_vec(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Int int_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u =
      neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Int r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += Int(static_cast<unsigned long>(u));
  return neg ? Int(-r) : r;
}

}  // namespace

SearchResult solve_coset_cvp(const CosetCvpProblem& p) {
  const LatticeContext& ctx = *p.ctx;
  const int s = ctx.s;
  if (p.target.dim() != s || p.shift.dim() != s)
    throw ValidationError("coset CVP: cycle dimension mismatch");
  if (p.scale < 1) throw ValidationError("coset CVP: scale must be a positive integer");

  // x = shift + scale*l, so q(x - target) = scale^2 * Q(l - t') with
  // t' = (target - shift)/scale and Q the norm of -Gram.
  std::vector<Rat> tprime(s);
  for (int i = 0; i < s; ++i) tprime[i] = (p.target[i] - p.shift[i]) / rat_of(p.scale);

  const Ldl& f = ctx.ldl;
  bool has_best = false;
  Rat best(0);
  std::vector<Int> l(s, Int(0)), lexmin;
  std::vector<std::vector<Int>> optima;
  long long count = 0;
  long long nodes = 0;
  bool complete = true;

  std::vector<Rat> center(s), rho_above(s, Rat(0));
  std::vector<Int> up_next(s), down_next(s);
  std::vector<char> up_done(s, 0), down_done(s, 0);

  auto enter = [&](int i) {
    Rat c = tprime[i];
    for (int j = i + 1; j < s; ++j) c -= f.l(j, i) * (Rat(l[j]) - tprime[j]);
    center[i] = c;
    Int u = rat_ceil(c);
    up_next[i] = u;
    down_next[i] = u - 1;
    up_done[i] = down_done[i] = 0;
  };

  int i = s - 1;
  enter(i);
  while (true) {
    if (up_done[i] && down_done[i]) {
      ++i;  // both directions pruned: retreat
      if (i >= s) break;
      continue;
    }
    bool use_up;
    if (up_done[i]) use_up = false;
    else if (down_done[i]) use_up = true;
    else {
      // next value with the smaller distance to the real center; ties go up
      Rat du = Rat(up_next[i]) - center[i];
      Rat dd = center[i] - Rat(down_next[i]);
      use_up = (du <= dd);
    }
    if (nodes >= p.node_budget) {
      complete = false;
      break;
    }
    ++nodes;
    Int val = use_up ? up_next[i] : down_next[i];
    Rat w = Rat(val) - center[i];
    Rat cost = rho_above[i] + f.diag[i] * w * w;
    if (has_best && cost > best) {
      // values farther out on this side only cost more
      (use_up ? up_done[i] : down_done[i]) = 1;
      continue;
    }
    (use_up ? up_next[i] : down_next[i]) = use_up ? Int(val + 1) : Int(val - 1);
    l[i] = val;
    if (i == 0) {
      if (!has_best || cost < best) {
        has_best = true;
        best = cost;
        optima.clear();
        count = 0;
        lexmin = l;
      }
      if (cost == best) {
        ++count;
        if (static_cast<int>(optima.size()) < p.minimizer_cap) optima.push_back(l);
        if (lex_less_vec(l, lexmin)) lexmin = l;
      }
      continue;  // keep enumerating level 0
    }
    rho_above[i - 1] = cost;
    --i;
    enter(i);
  }

  SearchResult res;
  res.nodes_visited = nodes;
  res.complete = complete;
  res.minimizer_count = count;
  auto to_x = [&](const std::vector<Int>& lv) {
    Cycle x(s);
    for (int k = 0; k < s; ++k) x[k] = p.shift[k] + rat_of(p.scale) * Rat(lv[k]);
    return x;
  };
  if (has_best) {
    res.optimum_value = Rat(int_of(p.scale) * int_of(p.scale)) * best;
    for (const auto& lv : optima) res.minimizers.push_back(to_x(lv));
    res.canonical = to_x(lexmin);
  } else {
    res.canonical = Cycle(s);
  }
  return res;
}

SearchResult minimize_chi(const LatticeContext& ctx, long long node_budget, int minimizer_cap) {
  CosetCvpProblem p;
  p.ctx = &ctx;
  p.target = Rat(1, 2) * ctx.z_k;
  p.shift = zero_cycle(ctx.s);
  p.scale = 1;
  p.node_budget = node_budget;
  p.minimizer_cap = minimizer_cap;
  SearchResult r = solve_coset_cvp(p);
  // min chi = (q(l* - Z_K/2) - q(Z_K/2))/2 where q(Z_K/2) = -K^2/4
  Rat q_half_zk = -ctx.k_squared / 4;
  r.optimum_value = (r.optimum_value - q_half_zk) / 2;
  return r;
}

namespace {

struct ScanBox {
  int s = 0;
  std::vector<long long> lo, hi;  // inclusive integral bounds
  unsigned long long volume = 0;
};

constexpr long long kMaxScanCoord = 1LL << 31;  // keeps the int128 kernel overflow-free

ScanBox make_scan_box(const LatticeContext& ctx, const Cycle& box_low, const Cycle& box_high,
                      long long volume_budget) {
  if (box_low.dim() != ctx.s || box_high.dim() != ctx.s)
    throw ValidationError("box scan: cycle dimension mismatch");
  ScanBox box;
  box.s = ctx.s;
  box.lo.resize(ctx.s);
  box.hi.resize(ctx.s);
  Int vol(1);
  for (int i = 0; i < ctx.s; ++i) {
    Int lo = rat_ceil(box_low[i]);
    Int hi = rat_floor(box_high[i]);
    if (lo > hi)
      throw ValidationError("box scan: empty box in coordinate " + std::to_string(i + 1));
    Int bound = int_of(kMaxScanCoord);
    if (lo < -bound || lo > bound || hi < -bound || hi > bound)
      throw ValidationError("box scan: coordinate bound exceeds supported range");
    box.lo[i] = lo.get_si();
    box.hi[i] = hi.get_si();
    vol *= hi - lo + 1;
  }
  if (vol > int_of(volume_budget))
    throw BudgetError("box scan: volume " + vol.get_str() + " exceeds budget " +
                      std::to_string(volume_budget));
  box.volume = static_cast<unsigned long long>(vol.get_ui());
  return box;
}

// Lexicographic odometer over the sub-box where the first coordinate runs in
// [first_lo, first_hi]. Maintains w = Gram * l incrementally and hands each
// point's value 2*chi(l) = l.b - l.w to the sink.
template <typename Sink>
void scan_box_range(const LatticeContext& ctx, const ScanBox& box, long long first_lo,
                    long long first_hi, Sink&& sink) {
  const int s = box.s;
  std::vector<long long> l(box.lo);
  l[0] = first_lo;
  std::vector<__int128> w(s, 0);
  for (int j = 0; j < s; ++j) {
    __int128 acc = 0;
    for (int k = 0; k < s; ++k) acc += static_cast<__int128>(ctx.gram.at(j, k)) * l[k];
    w[j] = acc;
  }
  auto bump = [&](int coord, long long delta) {
    l[coord] += delta;
    for (int j = 0; j < s; ++j) {
      long long g = ctx.gram.at(j, coord);
      if (g != 0) w[j] += static_cast<__int128>(g) * delta;
    }
  };
  while (true) {
    __int128 chi2 = 0;
    for (int j = 0; j < s; ++j)
      chi2 += static_cast<__int128>(l[j]) * (ctx.adjunction_rhs[j] - w[j]);
    sink(l, w, chi2);
    int c = s - 1;
    while (c > 0 && l[c] == box.hi[c]) {
      bump(c, box.lo[c] - box.hi[c]);
      --c;
    }
    if (c == 0) {
      if (l[0] == first_hi) break;
      bump(0, 1);
    } else {
      bump(c, 1);
    }
  }
}

struct ChiAccum {
  bool any = false;
  __int128 best2 = 0;
  std::vector<std::vector<long long>> minimizers;  // scan (= lex) order, capped
  long long count = 0;
  unsigned long long points = 0;
};

void accumulate_chi(const LatticeContext& ctx, const ScanBox& box, long long first_lo,
                    long long first_hi, int cap, ChiAccum& acc) {
  scan_box_range(ctx, box, first_lo, first_hi,
                 [&](const std::vector<long long>& l, const std::vector<__int128>&,
                     __int128 chi2) {
                   ++acc.points;
                   if (!acc.any || chi2 < acc.best2) {
                     acc.any = true;
                     acc.best2 = chi2;
                     acc.minimizers.clear();
                     acc.count = 0;
                   }
                   if (chi2 == acc.best2) {
                     ++acc.count;
                     if (static_cast<int>(acc.minimizers.size()) < cap) acc.minimizers.push_back(l);
                   }
                 });
}

SearchResult finish_chi_result(const LatticeContext& ctx, const ChiAccum& acc) {
  SearchResult res;
  res.nodes_visited = static_cast<long long>(acc.points);
  res.complete = true;
  res.minimizer_count = acc.count;
  res.optimum_value = make_rat(int_from_i128(acc.best2), 2);
  for (const auto& l : acc.minimizers) {
    Cycle c(ctx.s);
    for (int i = 0; i < ctx.s; ++i) c[i] = rat_of(l[i]);
    res.minimizers.push_back(c);
  }
  res.canonical = res.minimizers.front();  // scan order is lexicographic
  return res;
}

}  // namespace

SearchResult brute_force_min_chi_serial(const LatticeContext& ctx, const Cycle& box_low,
                                        const Cycle& box_high, long long volume_budget,
                                        int minimizer_cap) {
  ScanBox box = make_scan_box(ctx, box_low, box_high, volume_budget);
  ChiAccum acc;
  accumulate_chi(ctx, box, box.lo[0], box.hi[0], std::max(1, minimizer_cap), acc);
  return finish_chi_result(ctx, acc);
}

SearchResult brute_force_min_chi(const LatticeContext& ctx, const Cycle& box_low,
                                 const Cycle& box_high, long long volume_budget,
                                 int minimizer_cap) {
  minimizer_cap = std::max(1, minimizer_cap);
  ScanBox box = make_scan_box(ctx, box_low, box_high, volume_budget);
  const long long width = box.hi[0] - box.lo[0] + 1;
  const int chunks = static_cast<int>(std::min<long long>(width, 4LL * omp_get_max_threads()));
  std::vector<ChiAccum> parts(chunks);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < chunks; ++c) {
    long long a = box.lo[0] + width * c / chunks;
    long long b = box.lo[0] + width * (c + 1) / chunks - 1;
    accumulate_chi(ctx, box, a, b, minimizer_cap, parts[c]);
  }
  // merge in chunk order: reproduces the serial scan exactly
  ChiAccum total;
  for (const ChiAccum& part : parts) {
    total.points += part.points;
    if (!part.any) continue;
    if (!total.any || part.best2 < total.best2) {
      total.any = true;
      total.best2 = part.best2;
      total.minimizers.clear();
      total.count = 0;
    }
    if (part.best2 == total.best2) {
      total.count += part.count;
      for (const auto& l : part.minimizers) {
        if (static_cast<int>(total.minimizers.size()) >= minimizer_cap) break;
        total.minimizers.push_back(l);
      }
    }
  }
  return finish_chi_result(ctx, total);
}

std::vector<Cycle> anti_nef_cycles_in_box(const LatticeContext& ctx, const Cycle& box_low,
                                          const Cycle& box_high, long long volume_budget) {
  ScanBox box = make_scan_box(ctx, box_low, box_high, volume_budget);
  std::vector<Cycle> out;
  scan_box_range(ctx, box, box.lo[0], box.hi[0],
                 [&](const std::vector<long long>& l, const std::vector<__int128>& w, __int128) {
                   bool nonzero = false;
                   for (long long v : l) {
                     if (v < 0) return;
                     if (v > 0) nonzero = true;
                   }
                   if (!nonzero) return;
                   for (__int128 wi : w)
                     if (wi > 0) return;
                   Cycle c(ctx.s);
                   for (int i = 0; i < ctx.s; ++i) c[i] = rat_of(l[i]);
                   out.push_back(c);
                 });
  return out;
}

Cycle artin_cycle(const LatticeContext& ctx) {
  const int s = ctx.s;
  std::vector<Int> z(s, Int(1));
  std::vector<Int> w(s, Int(0));  // w = Gram * z
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k) w[j] += int_of(ctx.gram.at(j, k));
  long long guard = 0;
  while (true) {
    int j = -1;
    for (int k = 0; k < s; ++k)
      if (sgn(w[k]) > 0) {
        j = k;
        break;
      }
    if (j < 0) break;
    z[j] += 1;
    for (int k = 0; k < s; ++k) w[k] += int_of(ctx.gram.at(k, j));
    if (++guard > 10000000LL)
      throw Error("internal: Laufer iteration did not terminate");
  }
  Cycle c(s);
  for (int i = 0; i < s; ++i) c[i] = Rat(z[i]);
  return c;
}

Cycle characteristic_base(const LatticeContext& ctx) {
  if (!ctx.unimodular)
    throw ValidationError("characteristic base needs a unimodular intersection form");
  const int s = ctx.s;
  // Solve Gram * xi = diag(Gram) over GF(2); rows fit in 64-bit masks.
  std::vector<uint64_t> row(s, 0);
  std::vector<int> rhs(s, 0);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j)
      if (((ctx.gram.at(i, j) % 2) + 2) % 2) row[i] |= (1ULL << j);
    rhs[i] = static_cast<int>(((ctx.gram.at(i, i) % 2) + 2) % 2);
  }
  std::vector<int> pivot_col(s, -1);
  int r = 0;
  for (int col = 0; col < s && r < s; ++col) {
    int p = -1;
    for (int i = r; i < s; ++i)
      if (row[i] & (1ULL << col)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(row[p], row[r]);
    std::swap(rhs[p], rhs[r]);
    for (int i = 0; i < s; ++i)
      if (i != r && (row[i] & (1ULL << col))) {
        row[i] ^= row[r];
        rhs[i] ^= rhs[r];
      }
    pivot_col[r] = col;
    ++r;
  }
  if (r < s) throw Error("internal: Gram matrix singular mod 2 despite |det| = 1");
  Cycle xi(s);
  for (int i = 0; i < s; ++i) xi[pivot_col[i]] = rhs[i];
  return xi;
}

bool is_characteristic(const LatticeContext& ctx, const Cycle& xi) {
  for (int i = 0; i < ctx.s; ++i) {
    Cycle e(ctx.s);
    e[i] = 1;
    Rat d = pairing(ctx, xi, e) - rat_of(ctx.gram.at(i, i));
    if (!rat_is_integer(d)) return false;
    Int num = d.get_num();
    if (num % 2 != 0) return false;
  }
  return true;
}

ElkiesResult elkies_min_square(const LatticeContext& ctx, long long node_budget) {
  ElkiesResult r;
  CosetCvpProblem p;
  p.ctx = &ctx;
  p.target = zero_cycle(ctx.s);
  p.shift = characteristic_base(ctx);
  p.scale = 2;
  p.node_budget = node_budget;
  r.search = solve_coset_cvp(p);
  r.xi = r.search.canonical;
  r.xi_squared = -r.search.optimum_value;  // q(xi) = -(xi, xi)
  r.slack = r.xi_squared + ctx.s;
  return r;
}

CosetConjectureResult check_coset_conjecture(const LatticeContext& ctx, long long node_budget) {
  CosetConjectureResult r;
  CosetCvpProblem p;
  p.ctx = &ctx;
  p.target = zero_cycle(ctx.s);
  p.shift = ctx.z_k;
  p.scale = 2;
  p.node_budget = node_budget;
  r.search = solve_coset_cvp(p);
  r.xi = r.search.canonical;
  r.xi_squared = -r.search.optimum_value;
  r.z_min = artin_cycle(ctx);
  r.z_min_squared = pairing(ctx, r.z_min, r.z_min);
  r.holds = (r.xi_squared + ctx.s >= r.z_min_squared);
  return r;
}

}  // namespace durfee
