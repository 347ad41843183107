#include "durfee/monomial.hpp"

#include "doctest.h"
#include "durfee/errors.hpp"
#include "durfee/rng.hpp"
#include "oracles.hpp"

using namespace durfee;

namespace {

MonomialIdeal maximal_ideal(int e) {
  std::vector<std::vector<long long>> gens;
  for (int j = 0; j < e; ++j) {
    std::vector<long long> g(e, 0);
    g[j] = 1;
    gens.push_back(g);
  }
  return make_ideal(e, gens);
}

}  // namespace

TEST_CASE("make_ideal minimalizes and validates") {
  MonomialIdeal m = maximal_ideal(2);
  CHECK(m.generators.size() == 2);
  CHECK(m.is_m_primary());

  MonomialIdeal a = make_ideal(2, {{2, 0}, {0, 3}, {2, 1}});
  CHECK(a.generators.size() == 2);  // (2,1) >= (2,0) dropped
  CHECK(a.contains({2, 1}));

  MonomialIdeal not_primary = make_ideal(2, {{2, 0}});
  CHECK_FALSE(not_primary.is_m_primary());
  CHECK_THROWS_AS(not_primary.pure_power_box(), ValidationError);

  CHECK_THROWS_AS(make_ideal(2, {}), ValidationError);
  CHECK_THROWS_AS(make_ideal(2, {{0, 0}}), ValidationError);  // unit ideal
  CHECK_THROWS_AS(make_ideal(2, {{1, 2, 3}}), ValidationError);
  CHECK_THROWS_AS(make_ideal(2, {{-1, 2}}), ValidationError);
}

TEST_CASE("colength examples") {
  CHECK(colength(maximal_ideal(2)) == 1);
  CHECK(colength(maximal_ideal(4)) == 1);
  CHECK(colength(make_ideal(2, {{2, 0}, {0, 3}})) == 6);
  // m^2 = (x^2, xy, y^2)
  CHECK(colength(make_ideal(2, {{2, 0}, {1, 1}, {0, 2}})) == 3);
  // pure powers: colength is the product of the exponents
  CHECK(colength(make_ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})) == 24);
  CHECK_THROWS_AS(colength(make_ideal(2, {{2, 0}})), ValidationError);
}

TEST_CASE("colength agrees with inclusion-exclusion on random ideals") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    MonomialIdeal a = random_m_primary(3, 4, 0.7, seed);
    CHECK(colength(a) == oracles::inclusion_exclusion_colength(a));
  }
}

TEST_CASE("serial and OpenMP colength agree") {
  for (uint64_t seed = 50; seed <= 70; ++seed) {
    MonomialIdeal a = random_m_primary(4, 4, 0.5, seed);
    CHECK(colength(a) == colength_serial(a));
  }
}

TEST_CASE("colength budget error") {
  MonomialIdeal big = make_ideal(3, {{1000, 0, 0}, {0, 1000, 0}, {0, 0, 1000}});
  CHECK_THROWS_AS(colength(big, 1000000), BudgetError);
}

TEST_CASE("product examples") {
  MonomialIdeal m = maximal_ideal(2);
  MonomialIdeal m2 = product(m, m);
  CHECK(m2.generators == std::vector<std::vector<long long>>{{0, 2}, {1, 1}, {2, 0}});

  MonomialIdeal a = make_ideal(2, {{2, 0}, {0, 3}});
  MonomialIdeal ab = product(a, m);
  CHECK(ab.generators == std::vector<std::vector<long long>>{{0, 4}, {1, 3}, {2, 1}, {3, 0}});

  CHECK_THROWS_AS(product(m, maximal_ideal(3)), ValidationError);
}

TEST_CASE("monotonicity: containment of staircases reverses colength") {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    MonomialIdeal a = random_m_primary(3, 4, 0.6, seed);
    MonomialIdeal am = product(a, maximal_ideal(3));  // a*m is contained in a
    CHECK(colength(am) >= colength(a));
  }
}

TEST_CASE("colength inequality: worked instances") {
  MonomialIdeal m = maximal_ideal(2);
  // e=1: equality, colengths just add
  {
    MonomialIdeal x2 = make_ideal(1, {{2}});
    MonomialIdeal x5 = make_ideal(1, {{5}});
    ColengthLemmaResult r = verify_colength_lemma({x2, x5});
    CHECK(r.lhs == 7);
    CHECK(r.rhs == 7);
    CHECK(r.holds);
    CHECK_FALSE(r.strict);
  }
  // (m, m) in 2 variables: 2*(1+1) = 4 > 3
  {
    ColengthLemmaResult r = verify_colength_lemma({m, m});
    CHECK(r.lhs == 4);
    CHECK(r.rhs == 3);
    CHECK(r.strict);
  }
  // ((x^2,y^3), m): 2*(6+1) = 14 > colength of (x^3, x^2 y, x y^3, y^4) = 8
  {
    MonomialIdeal a = make_ideal(2, {{2, 0}, {0, 3}});
    ColengthLemmaResult r = verify_colength_lemma({a, m});
    CHECK(r.lhs == 14);
    MonomialIdeal prod = product(a, m);
    CHECK(oracles::inclusion_exclusion_colength(prod) == 8);
    CHECK(r.rhs == 8);
    CHECK(r.strict);
  }
}

TEST_CASE("colength inequality on random families") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    DetRng rng(seed);
    int e = static_cast<int>(rng.range(1, 4));
    int d = static_cast<int>(rng.range(1, 3));
    std::vector<MonomialIdeal> ideals;
    for (int k = 0; k < d; ++k)
      ideals.push_back(random_m_primary(e, 3, 0.5, mix_seed(seed, k)));
    ColengthLemmaResult r = verify_colength_lemma(ideals);
    CHECK(r.holds);
    if (d >= 2 && e >= 2) CHECK(r.strict);
    if (e == 1) {
      // one variable: colengths add under products, so equality iff d^0 = 1
      CHECK(r.lhs == r.rhs);
    }
  }
}

TEST_CASE("ray entry") {
  MonomialIdeal m = maximal_ideal(2);
  std::vector<Rat> ones{Rat(1), Rat(1)};
  RayValue r = ray_entry(m, ones);
  REQUIRE_FALSE(r.infinite);
  CHECK(r.value == 1);

  MonomialIdeal a = make_ideal(2, {{2, 0}, {0, 3}});
  r = ray_entry(a, ones);
  CHECK(r.value == 2);  // min(max(2/1), max(3/1))

  std::vector<Rat> axis{Rat(1), Rat(0)};
  r = ray_entry(a, axis);
  REQUIRE_FALSE(r.infinite);
  CHECK(r.value == 2);  // (0,3) unreachable, (2,0) needs rho = 2

  // direction vanishing on every generator's support
  MonomialIdeal pure_y = make_ideal(2, {{0, 2}});
  r = ray_entry(pure_y, axis);
  CHECK(r.infinite);
}

TEST_CASE("ray entry homogeneity r(c theta) = r(theta)/c") {
  DetRng rng(7);
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    MonomialIdeal a = random_m_primary(3, 4, 0.6, seed);
    for (int k = 0; k < 10; ++k) {
      std::vector<Rat> theta(3);
      for (Rat& t : theta) t = make_rat(int_of(rng.range(1, 9)), int_of(rng.range(1, 9)));
      Rat c = make_rat(int_of(rng.range(1, 7)), int_of(rng.range(1, 7)));
      std::vector<Rat> scaled(3);
      for (int j = 0; j < 3; ++j) scaled[j] = c * theta[j];
      RayValue r1 = ray_entry(a, theta);
      RayValue r2 = ray_entry(a, scaled);
      REQUIRE_FALSE(r1.infinite);
      CHECK(r2.value * c == r1.value);
    }
  }
}

TEST_CASE("radial containment and Hoelder checks") {
  MonomialIdeal m = maximal_ideal(2);
  // d = 1: trivial containment
  RadialReport r1 = radial_containment_check({m}, 20, 3);
  CHECK(r1.all_ok);
  // (m, m): r(1,1) = 2 and (2,2) dominates (1,1)+(1,1)
  RadialReport r2 = radial_containment_check({m, m}, 50, 3);
  CHECK(r2.all_ok);
  for (const RaySample& s : r2.samples) CHECK(s.entry_radii.size() == 2);
  // mixed ideals, more variables
  std::vector<MonomialIdeal> mixed{random_m_primary(3, 4, 0.6, 5), random_m_primary(3, 3, 0.4, 9),
                                   maximal_ideal(3)};
  RadialReport r3 = radial_containment_check(mixed, 40, 11);
  CHECK(r3.all_ok);
}

TEST_CASE("Hoelder equality case: equal radii") {
  // d = 2, e = 2, r1 = r2 = 1: 2*(1+1) = 4 = (1+1)^2
  MonomialIdeal m = maximal_ideal(2);
  std::vector<Rat> ones{Rat(1), Rat(1)};
  Rat r1 = ray_entry(m, ones).value;
  Rat r2 = ray_entry(m, ones).value;
  Rat lhs = 2 * (r1 * r1 + r2 * r2);
  Rat sum = r1 + r2;
  CHECK(lhs == sum * sum);
}

TEST_CASE("strictness witness") {
  // (x^2, y^3), d=2: a=2, a'=0, b=3 -> v = (2,3)
  {
    StrictnessWitness w = strictness_witness(make_ideal(2, {{2, 0}, {0, 3}}), 2);
    REQUIRE(w.found);
    CHECK(w.a == 2);
    CHECK(w.a_prime == 0);
    CHECK(w.b == 3);
    CHECK(w.v == std::vector<long long>{2, 3});
  }
  // m, d=2: v = (1,1), and xy lies in m^2
  {
    StrictnessWitness w = strictness_witness(maximal_ideal(2), 2);
    REQUIRE(w.found);
    CHECK(w.v == std::vector<long long>{1, 1});
  }
  // (x^3, xy, y^2), d=2: a=3, a'=1, b=1 -> v = (4,1)
  {
    StrictnessWitness w = strictness_witness(make_ideal(2, {{3, 0}, {1, 1}, {0, 2}}), 2);
    REQUIRE(w.found);
    CHECK(w.a == 3);
    CHECK(w.a_prime == 1);
    CHECK(w.b == 1);
    CHECK(w.v == std::vector<long long>{4, 1});
  }
  // three variables, d=3
  {
    MonomialIdeal a = make_ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}});
    StrictnessWitness w = strictness_witness(a, 3);
    REQUIRE(w.found);
    CHECK(ideal_power(a, 3).contains(w.v));
  }
}

TEST_CASE("random m-primary generation") {
  // density 0: only pure powers, colength is their product
  MonomialIdeal a = random_m_primary(3, 4, 0.0, 42);
  CHECK(a.generators.size() == 3);
  Int expect(1);
  for (const auto& g : a.generators)
    for (long long e : g)
      if (e > 0) expect *= int_of(e);
  CHECK(colength(a) == expect);

  // determinism
  MonomialIdeal b1 = random_m_primary(3, 4, 0.8, 7);
  MonomialIdeal b2 = random_m_primary(3, 4, 0.8, 7);
  CHECK(b1.generators == b2.generators);
  CHECK(b1.is_m_primary());

  // a seeded instance satisfies the inequality strictly
  MonomialIdeal c = random_m_primary(2, 3, 0.5, 7);
  ColengthLemmaResult r = verify_colength_lemma({c, c});
  CHECK(r.strict);
}

TEST_CASE("ideal file round trip") {
  MonomialIdeal a = make_ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 1}, {1, 1, 0}});
  MonomialIdeal b = parse_ideal(serialize_ideal(a));
  CHECK(a.generators == b.generators);
  CHECK(a.num_vars == b.num_vars);

  MonomialIdeal c = parse_ideal("# the maximal ideal\nvars 2\n1 0\n0 1\n");
  CHECK(c.generators.size() == 2);

  CHECK_THROWS_AS(parse_ideal("1 0\n"), ParseError);          // missing header
  CHECK_THROWS_AS(parse_ideal("vars 2\n1\n"), ParseError);    // wrong arity
  CHECK_THROWS_AS(parse_ideal("vars 2\n1 x\n"), ParseError);  // bad exponent
  CHECK_THROWS_AS(parse_ideal("vars 0\n"), ParseError);
}
