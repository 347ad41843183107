#include "durfee/bounds.hpp"

#include "durfee/errors.hpp"

namespace durfee {

SylvesterTriple smoothing_invariants(const Int& p_g, const Int& mu0, const Int& k2_plus_s) {
  SylvesterTriple t;
  t.mu = 12 * p_g + k2_plus_s - mu0;
  t.mu_plus = 2 * p_g - mu0;
  t.mu_minus = t.mu - mu0 - t.mu_plus;
  t.sigma = t.mu_plus - t.mu_minus;
  if (t.sigma != -(8 * p_g + k2_plus_s))
    throw Error("internal: sigma routes disagree");
  t.realizable = (sgn(t.mu_plus) >= 0 && sgn(t.mu_minus) >= 0 && sgn(mu0) >= 0);
  return t;
}

Int sigma_from_durfee(const Int& p_g, const Int& mu, const Int& mu0) {
  return 4 * p_g - mu0 - mu;
}

const BoundRow* BoundReport::find(const std::string& id) const {
  for (const BoundRow& r : rows)
    if (r.id == id) return &r;
  return nullptr;
}

namespace {

struct RowBuilder {
  BoundRow row;
  bool ok = true;

  RowBuilder(std::string id, std::string desc) {
    row.id = std::move(id);
    row.description = std::move(desc);
  }
  void require(bool cond, const std::string& why) {
    if (!cond) {
      ok = false;
      row.assumptions_violated.push_back(why);
    }
  }
  void note(const std::string& n) { row.notes.push_back(n); }
  BoundRow finish() {
    row.applicable = ok;
    return row;
  }
  BoundRow finish(const Rat& lhs, const Rat& rhs) {
    if (ok) {
      row.lhs = lhs;
      row.rhs = rhs;
      row.margin = lhs - rhs;
      row.holds = (sgn(*row.margin) >= 0);
    }
    row.applicable = ok;
    return row;
  }
};

}  // namespace

BoundRow weak_inequality_row(const Int& p_g, const Int& mu, const Int& mu0) {
  RowBuilder b("B13", "weak inequality 4 p_g <= mu + mu0 (sigma <= 0)");
  return b.finish(Rat(mu + mu0), Rat(4 * p_g));
}

BoundReport evaluate_bounds(const LatticeContext& ctx, const SmoothingData& data,
                            const std::optional<Rat>& min_chi,
                            const std::optional<ZCycleInput>& z_input) {
  BoundReport report;
  const bool has_pg = data.p_g.has_value();
  const bool has_e = data.embedding_dim >= 3;
  const int e = data.embedding_dim;
  const int eps = data.epsilon;

  if (eps == 1 && !ctx.numerically_gorenstein)
    throw ValidationError(
        "Gorenstein flag set but Z_K is not integral; Gorenstein implies numerically Gorenstein");

  const Rat k2s = ctx.k2_plus_s;
  const Rat e_sq = pairing(ctx, ctx.reduced_cycle, ctx.reduced_cycle);
  Rat e_dot_zk(0);
  for (long long bi : ctx.adjunction_rhs) e_dot_zk += rat_of(bi);
  const Rat b1 = rat_of(link_first_betti(ctx.graph));
  const Rat euler = rat_of(graph_euler_characteristic(ctx.graph));
  const Rat mu0 = Rat(data.mu0);

  std::optional<Rat> sigma_big;  // Sigma = 8 p_g + K^2 + s
  if (has_pg) sigma_big = 8 * Rat(*data.p_g) + k2s;

  std::optional<ParityCycles> parity;
  if (ctx.numerically_gorenstein) parity = parity_decomposition(ctx);

  auto require_common = [&](RowBuilder& b, bool needs_pg, bool needs_e) {
    if (needs_pg) b.require(has_pg, "p_g not supplied");
    if (needs_e) b.require(has_e, "embedding dimension e not supplied");
  };
  auto nu_note = [&](RowBuilder& b) {
    if (data.nu_is_proxy)
      b.note("nu is the -(Z_min)^2 proxy; the maximal cycle satisfies Z^2 >= -nu");
  };

  // B1, Prop 2.2: p_g + min chi >= 2^(eps-e) (p_g + 1)
  {
    RowBuilder b("B1", "p_g + min chi >= 2^(eps-e) (p_g+1)");
    require_common(b, true, true);
    b.require(ctx.numerically_gorenstein, "not numerically Gorenstein");
    b.require(!ctx.du_val, "Du Val singularity (excluded: min chi = 0 at l = 0)");
    b.require(min_chi.has_value(), "min chi not available");
    if (b.ok)
      report.rows.push_back(
          b.finish(Rat(*data.p_g) + *min_chi, pow2_rat(eps - e) * (Rat(*data.p_g) + 1)));
    else
      report.rows.push_back(b.finish());
  }

  // B2, Thm 3.1(1): (K^2+s)/8 >= min chi
  {
    RowBuilder b("B2", "(K^2+s)/8 >= min chi");
    b.require(ctx.unimodular, "intersection form not unimodular");
    b.require(min_chi.has_value(), "min chi not available");
    if (b.ok)
      report.rows.push_back(b.finish(k2s / 8, *min_chi));
    else
      report.rows.push_back(b.finish());
  }

  // B3, Thm 3.1(2): p_g + (K^2+s)/8 >= 2^(eps-e) (p_g + 1)
  {
    RowBuilder b("B3", "p_g + (K^2+s)/8 >= 2^(eps-e) (p_g+1)");
    b.require(ctx.unimodular, "intersection form not unimodular");
    require_common(b, true, true);
    if (b.ok)
      report.rows.push_back(
          b.finish(Rat(*data.p_g) + k2s / 8, pow2_rat(eps - e) * (Rat(*data.p_g) + 1)));
    else
      report.rows.push_back(b.finish());
  }

  // B4: -sigma >= 2^(4-e) (p_g + 1) for unimodular Gorenstein
  {
    RowBuilder b("B4", "-sigma >= 2^(4-e) (p_g+1)");
    b.require(ctx.unimodular, "intersection form not unimodular");
    b.require(eps == 1, "not Gorenstein");
    require_common(b, true, true);
    if (b.ok)
      report.rows.push_back(b.finish(*sigma_big, pow2_rat(4 - e) * (Rat(*data.p_g) + 1)));
    else
      report.rows.push_back(b.finish());
  }

  // B5 identity: Sigma = 8(p_g + chi(m)) + x^2 + s  (exact identity)
  {
    RowBuilder b("B5-identity", "Sigma = 8 (p_g + chi(m)) + x^2 + s");
    require_common(b, true, false);
    b.require(ctx.numerically_gorenstein, "not numerically Gorenstein");
    if (b.ok) {
      Rat x_sq = pairing(ctx, parity->x, parity->x);
      Rat rhs = 8 * (Rat(*data.p_g) + chi(ctx, parity->m)) + x_sq + ctx.s;
      BoundRow row = b.finish(*sigma_big, rhs);
      row.holds = (*row.margin == 0);  // identity, not an inequality
      report.rows.push_back(row);
      if (!row.holds) throw Error("internal: parity identity failed");
    } else {
      report.rows.push_back(b.finish());
    }
  }

  // shared requirements for the general-case rows
  auto general_case = [&](RowBuilder& b) {
    require_common(b, true, true);
    b.require(ctx.numerically_gorenstein, "not numerically Gorenstein");
    b.require(!ctx.du_val, "Du Val singularity (excluded)");
  };

  // B5: Sigma >= 2^(eps+3-e) (p_g+1) + x^2 + s
  {
    RowBuilder b("B5", "Sigma >= 2^(eps+3-e) (p_g+1) + x^2 + s");
    general_case(b);
    if (b.ok) {
      Rat x_sq = pairing(ctx, parity->x, parity->x);
      report.rows.push_back(
          b.finish(*sigma_big, pow2_rat(eps + 3 - e) * (Rat(*data.p_g) + 1) + x_sq + ctx.s));
    } else {
      report.rows.push_back(b.finish());
    }
  }

  // B6: Sigma >= 2^(eps+3-e) (p_g+1) + E^2 + xbar^2 + s
  {
    RowBuilder b("B6", "Sigma >= 2^(eps+3-e) (p_g+1) + E^2 + xbar^2 + s");
    general_case(b);
    if (b.ok) {
      Rat xbar_sq = pairing(ctx, parity->x_bar, parity->x_bar);
      report.rows.push_back(b.finish(
          *sigma_big, pow2_rat(eps + 3 - e) * (Rat(*data.p_g) + 1) + e_sq + xbar_sq + ctx.s));
    } else {
      report.rows.push_back(b.finish());
    }
  }

  // B7: Sigma >= 2^(eps+3-e) (p_g+1) - 1 + b1 + (E, Z_K)
  {
    RowBuilder b("B7", "Sigma >= 2^(eps+3-e) (p_g+1) - 1 + b1 + (E,Z_K)");
    general_case(b);
    if (b.ok) {
      Rat rhs = pow2_rat(eps + 3 - e) * (Rat(*data.p_g) + 1) - 1 + b1 + e_dot_zk;
      Rat rhs2 = pow2_rat(eps + 3 - e) * (Rat(*data.p_g) + 1) + e_sq + euler;
      if (rhs != rhs2) throw Error("internal: the two forms of the b1 bound disagree");
      report.rows.push_back(b.finish(*sigma_big, rhs));
    } else {
      report.rows.push_back(b.finish());
    }
  }

  // B8, t-family: Sigma >= c(t) p_g - 2^(t+1) nu + A + 2^-(t+e-eps)
  {
    RowBuilder b("B8", "Sigma >= c(t) p_g - 2^(t+1) nu + A + 2^-(t+e-eps)");
    general_case(b);
    b.require(data.nu.has_value(), "multiplicity nu not supplied");
    if (b.ok) {
      long t = data.t.value_or(static_cast<long>(e - eps - 3));
      b.require(t >= e - eps - 3, "t below e - eps - 3");
      if (b.ok) {
        Rat coeff = pow2_rat(-(e - eps - 3)) - pow2_rat(-t) + pow2_rat(-(t + e - eps));
        Rat a_const = pow2_rat(eps + 3 - e) - 1 + b1;
        Rat rhs = coeff * Rat(*data.p_g) - pow2_rat(t + 1) * Rat(*data.nu) + a_const +
                  pow2_rat(-(t + e - eps));
        b.note("t = " + std::to_string(t));
        nu_note(b);
        report.rows.push_back(b.finish(*sigma_big, rhs));
      } else {
        report.rows.push_back(b.finish());
      }
    } else {
      report.rows.push_back(b.finish());
    }
  }

  // B9: Sigma >= 2 (p_g + chi(Z)) + 1 + b1 - nu
  {
    RowBuilder b("B9", "Sigma >= 2 (p_g + chi(Z)) + 1 + b1 - nu");
    require_common(b, true, false);
    b.require(e == 3, "not a hypersurface (e != 3)");
    b.require(eps == 1, "not Gorenstein");
    b.require(data.nu.has_value(), "multiplicity nu not supplied");
    b.require(z_input.has_value(), "no Z cycle supplied");
    if (b.ok) {
      b.note(z_input->is_proxy ? "Z = Z_min (proxy for the maximal cycle)" : "Z = user Z_max");
      nu_note(b);
      Rat rhs = 2 * (Rat(*data.p_g) + chi(ctx, z_input->z)) + 1 + b1 - Rat(*data.nu);
      report.rows.push_back(b.finish(*sigma_big, rhs));
    } else {
      report.rows.push_back(b.finish());
    }
  }

  // B10: -sigma >= (p_g+1)/2 + 1 + mu0 - nu
  {
    RowBuilder b("B10", "-sigma >= (p_g+1)/2 + 1 + mu0 - nu");
    require_common(b, true, false);
    b.require(e == 3, "not a hypersurface (e != 3)");
    b.require(eps == 1, "not Gorenstein");
    b.require(data.nu.has_value(), "multiplicity nu not supplied");
    if (b.ok) {
      nu_note(b);
      report.rows.push_back(
          b.finish(*sigma_big, (Rat(*data.p_g) + 1) / 2 + 1 + mu0 - Rat(*data.nu)));
    } else {
      report.rows.push_back(b.finish());
    }
  }

  // B11, Thm 1.2(2): -sigma >= 1 + mu0 for hypersurfaces
  {
    RowBuilder b("B11", "-sigma >= 1 + mu0");
    require_common(b, true, false);
    b.require(e == 3, "not a hypersurface (e != 3)");
    b.require(eps == 1, "not Gorenstein");
    if (b.ok)
      report.rows.push_back(b.finish(*sigma_big, Rat(1) + mu0));
    else
      report.rows.push_back(b.finish());
  }

  // B12, sharper hypersurface bound for nu >= 4
  {
    RowBuilder b("B12", "-sigma >= (2/3)(p_g - C(nu,3)) + 2 C(nu-1,3) - nu + 3 + mu0");
    require_common(b, true, false);
    b.require(e == 3, "not a hypersurface (e != 3)");
    b.require(eps == 1, "not Gorenstein");
    b.require(data.nu.has_value(), "multiplicity nu not supplied");
    if (b.ok && *data.nu < 4) b.require(false, "nu < 4");
    if (b.ok) {
      nu_note(b);
      const Int& nu = *data.nu;
      Rat rhs = Rat(2, 3) * (Rat(*data.p_g) - Rat(binomial(nu, 3))) +
                2 * Rat(binomial(nu - 1, 3)) - Rat(nu) + 3 + mu0;
      report.rows.push_back(b.finish(*sigma_big, rhs));
    } else {
      report.rows.push_back(b.finish());
    }
  }

  // B13, weak inequality with mu from Laufer's formula
  {
    RowBuilder b("B13", "weak inequality 4 p_g <= mu + mu0 (sigma <= 0)");
    require_common(b, true, false);
    b.require(data.k2_plus_s.has_value(),
              "K^2+s not an integer (not numerically Gorenstein), Laufer's formula inapplicable");
    if (b.ok) {
      if (eps != 1) b.note("mu derived from Laufer's formula, which assumes a Gorenstein smoothing");
      SylvesterTriple t = smoothing_invariants(*data.p_g, data.mu0, *data.k2_plus_s);
      report.rows.push_back(b.finish(Rat(t.mu + data.mu0), Rat(4 * *data.p_g)));
    } else {
      report.rows.push_back(b.finish());
    }
  }

  return report;
}

HomogeneousIcis homogeneous_icis(const std::vector<long long>& degrees) {
  if (degrees.empty()) throw ValidationError("homogeneous ICIS: need at least one degree");
  for (long long d : degrees) {
    if (d < 2) throw ValidationError("homogeneous ICIS: degrees must be >= 2");
    if (d > 1000000) throw ValidationError("homogeneous ICIS: degree out of supported range");
  }

  HomogeneousIcis h;
  h.degrees = degrees;
  h.r = static_cast<int>(degrees.size());
  h.e = h.r + 2;
  h.nu = 1;
  for (long long d : degrees) h.nu *= int_of(d);

  Rat per_unit(0);
  for (long long d : degrees) per_unit += make_rat(int_of(d - 1) * int_of(d - 2), 6);
  for (size_t i = 0; i < degrees.size(); ++i)
    for (size_t j = i + 1; j < degrees.size(); ++j)
      per_unit += make_rat(int_of(degrees[i] - 1) * int_of(degrees[j] - 1), 4);
  Rat p_g = Rat(h.nu) * per_unit;
  if (!rat_is_integer(p_g))
    throw Error("internal: homogeneous ICIS p_g came out non-integral (" + rat_str(p_g) + ")");
  h.p_g = p_g.get_num();

  bool equal = true;
  for (long long d : degrees) equal = equal && (d == degrees[0]);
  if (equal) {
    const long long d = degrees[0];
    const long long r = h.r;
    // (mu + 1 - nu)/nu = r(d^2-3d+2) + r(r-1)(d-1)^2/2
    Rat ratio = rat_of(r) * rat_of(d * d - 3 * d + 2) +
                make_rat(int_of(r) * int_of(r - 1) * int_of(d - 1) * int_of(d - 1), 2);
    Rat mpn = Rat(h.nu) * ratio;  // mu + 1 - nu
    if (!rat_is_integer(mpn)) throw Error("internal: mu formula came out non-integral");
    h.mu_plus_1_minus_nu = mpn.get_num();
    h.mu = *h.mu_plus_1_minus_nu + h.nu - 1;
    h.six_pg_identity = (h.r == 1) && (6 * h.p_g == *h.mu_plus_1_minus_nu);
    h.weak_holds = (4 * h.p_g <= *h.mu_plus_1_minus_nu);
    // refined coefficient 4((d-1)(r-1)+2(d-2)) / ((d-1)(r-1)+(4/3)(d-2))
    Rat denom = rat_of((d - 1) * (r - 1)) + Rat(4, 3) * rat_of(d - 2);
    if (sgn(denom) > 0) {
      Rat num = 4 * (rat_of((d - 1) * (r - 1)) + 2 * rat_of(d - 2));
      h.refined_coefficient = num / denom;
      h.refined_holds = (*h.refined_coefficient * Rat(h.p_g) <= Rat(*h.mu_plus_1_minus_nu));
    }
  }
  return h;
}

ConeSingularity cone_singularity(long long d) {
  if (d < 2) throw ValidationError("cone: degree must be >= 2");
  ConeSingularity c;
  c.graph = make_cone(d);
  LatticeContext ctx = build_context(c.graph);
  if (!rat_is_integer(ctx.k2_plus_s)) throw Error("internal: cone K^2+s not integral");

  c.data.p_g = binomial(int_of(d), 3);
  c.data.mu0 = int_of((d - 1) * (d - 2));
  c.data.k2_plus_s = ctx.k2_plus_s.get_num();
  c.data.embedding_dim = 3;
  c.data.epsilon = 1;
  c.data.nu = int_of(d);
  c.data.nu_is_proxy = false;

  c.triple = smoothing_invariants(*c.data.p_g, c.data.mu0, *c.data.k2_plus_s);
  Int dm1 = int_of(d - 1);
  if (c.triple.mu != dm1 * dm1 * dm1)
    throw Error("internal: cone Milnor number differs from (d-1)^3");
  return c;
}

std::vector<StrictIcisRow> strict_icis_asymptotics(int r, long long d_max) {
  if (r < 1) throw ValidationError("strict ICIS table: r must be >= 1");
  if (d_max < 2) throw ValidationError("strict ICIS table: d_max must be >= 2");
  std::vector<StrictIcisRow> rows;
  Int prev;
  for (long long d = 2; d <= d_max; ++d) {
    HomogeneousIcis h = homogeneous_icis(std::vector<long long>(r, d));
    StrictIcisRow row;
    row.d = d;
    row.nu = h.nu;
    row.p_g = h.p_g;
    row.mu = *h.mu;
    row.nu_minus_1 = h.nu - 1;
    row.bound = "-sigma >= " + row.nu_minus_1.get_str() + " - mu0";
    if (!rows.empty() && !(row.nu_minus_1 > prev))
      throw Error("internal: nu - 1 not strictly increasing in d");
    prev = row.nu_minus_1;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace durfee
