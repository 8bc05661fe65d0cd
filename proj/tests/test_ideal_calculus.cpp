#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sopkit/randgen.hpp"
#include "sopkit/verifier.hpp"

using namespace sopkit;
using sopkit::testing::dim_bruteforce;
using sopkit::testing::member_bounded;

namespace {

RingPtr R2 = Ring::make(Field::gf(kDefaultPrime), {"x", "y"});
RingPtr R3 = Ring::make(Field::gf(kDefaultPrime), {"x", "y", "z"});
RingPtr R4 = Ring::make(Field::gf(kDefaultPrime), {"x", "y", "u", "v"});

Ideal idl(const RingPtr& R, const char* text) { return parse_ideal(text, R); }

}  // namespace

TEST_CASE("sum, product, power") {
  CHECK(equal(ideal_sum(idl(R2, "(x)"), idl(R2, "(y)")), idl(R2, "(x, y)")));
  CHECK(equal(ideal_power(idl(R2, "(x, y)"), 2), idl(R2, "(x^2, x*y, y^2)")));
  CHECK(ideal_power(idl(R2, "(x, y)"), 0).is_unit());
  CHECK(equal(ideal_product(idl(R2, "(x, y)"), idl(R2, "(x)")), idl(R2, "(x^2, x*y)")));
}

TEST_CASE("intersection examples") {
  CHECK(equal(intersect(idl(R2, "(x)"), idl(R2, "(y)")), idl(R2, "(x*y)")));
  CHECK(equal(intersect(idl(R2, "(x)"), Ideal::unit(R2)), idl(R2, "(x)")));

  // x*f in (x^2, y) iff f in (x, y); oracle-checked on both boundary cases
  Ideal cap = intersect(idl(R2, "(x^2, y)"), idl(R2, "(x)"));
  CHECK(equal(cap, idl(R2, "(x^2, x*y)")));
  CHECK(member_bounded(parse_poly("x^2", R2), idl(R2, "(x^2, y)"), 3));
  CHECK(member_bounded(parse_poly("x*y", R2), idl(R2, "(x^2, y)"), 3));
  CHECK(!member_bounded(parse_poly("x", R2), idl(R2, "(x^2, y)"), 4));
}

TEST_CASE("colon examples") {
  CHECK(equal(colon(idl(R2, "(x^2)"), parse_poly("x", R2)), idl(R2, "(x)")));
  CHECK(equal(colon(idl(R2, "(x*y, y^2)"), parse_poly("y", R2)), idl(R2, "(x, y)")));
  CHECK(equal(colon(idl(R2, "(x^2)"), parse_poly("1", R2)), idl(R2, "(x^2)")));
  CHECK_THROWS_AS(colon(idl(R2, "(x)"), Polynomial::zero(R2)), Error);
  // maximality of (x, y): y itself is not in (x*y, y^2)
  CHECK(!member_bounded(parse_poly("y", R2), idl(R2, "(x*y, y^2)"), 4));
  // ideal form
  CHECK(equal(colon(idl(R2, "(x*y, y^2)"), idl(R2, "(y)")), idl(R2, "(x, y)")));
  CHECK(colon(idl(R2, "(x)"), Ideal::zero(R2)).is_unit());
}

TEST_CASE("saturation examples") {
  CHECK(equal(saturate(idl(R2, "(x^2, x*y)"), parse_poly("y", R2)), idl(R2, "(x)")));
  CHECK(saturate(idl(R2, "(x^2, x*y)"), parse_poly("x", R2)).is_unit());
  CHECK(equal(saturate(idl(R2, "(x^2, x*y)"), parse_poly("1", R2)), idl(R2, "(x^2, x*y)")));
  CHECK_THROWS_AS(saturate(idl(R2, "(x)"), Polynomial::zero(R2)), Error);
  CHECK_THROWS_AS(saturate(idl(R2, "(x)"), Ideal::zero(R2)), Error);
}

TEST_CASE("containment and equality") {
  CHECK(contains(idl(R2, "(x, y)"), idl(R2, "(x^2, x*y)")));
  CHECK(!contains(idl(R2, "(x^2)"), idl(R2, "(x)")));
  CHECK(equal(ideal_power(idl(R2, "(x, y)"), 2), idl(R2, "(x^2, x*y, y^2)")));
  CHECK(!equal(idl(R2, "(x)"), idl(R2, "(y)")));
}

TEST_CASE("krull dimension examples and oracle agreement") {
  CHECK(krull_dimension(Ideal::zero(R3)) == 3);
  CHECK(krull_dimension(idl(R4, "(x*u, x*v, y*u, y*v)")) == 2);
  CHECK(krull_dimension(idl(R2, "(x^2, x*y)")) == 1);
  CHECK(krull_dimension(Ideal::unit(R2)) == -1);

  for (const char* text : {"(0)", "(x^3 + y^3 + z^3)", "(x^2, x*y)", "(x, y, z)", "(x*y, y*z)"}) {
    Ideal I = idl(R3, text);
    CHECK(krull_dimension(I) == dim_bruteforce(I));
  }
  CHECK(krull_dimension(idl(R4, "(x*u, x*v, y*u, y*v)")) ==
        dim_bruteforce(idl(R4, "(x*u, x*v, y*u, y*v)")));

  InstanceGen gen(R3, 8888);
  for (int iter = 0; iter < 50; ++iter) {
    Ideal I = gen.random_ideal(3, 3);
    CHECK(krull_dimension(I) == dim_bruteforce(I));
  }

  for (const RingPresentation& R : Corpus::standard().rings)
    CHECK(krull_dimension(R.defining_ideal()) == dim_bruteforce(R.defining_ideal()));
}

TEST_CASE("membership coherence on random instances") {
  InstanceGen gen(R3, 13579);
  int done = 0;
  for (int iter = 0; done < 500; ++iter) {
    Ideal I = gen.random_ideal(3, 3);
    Ideal J = gen.random_ideal(3, 3);
    Polynomial f = gen.random_poly_small(3, 3);
    Polynomial g = gen.random_mono_or_binomial(2);
    if (g.is_zero()) continue;
    ++done;

    // f in I cap J  <=>  f in I and f in J
    CHECK(member(f, intersect(I, J)) == (member(f, I) && member(f, J)));

    // f in I : J  <=>  f*g in I for every generator g of J
    bool colon_member = member(f, colon(I, J));
    bool products_in = true;
    for (const Polynomial& h : J.generators())
      if (!member(f * h, I)) products_in = false;
    CHECK(colon_member == products_in);

    // f in I : g^inf  <=>  f*g^k in I for some small k
    bool sat_member = member(f, saturate(I, g));
    bool power_lands = false;
    for (std::uint32_t k = 0; k <= 12 && !power_lands; ++k)
      if (member(f * g.pow(k), I)) power_lands = true;
    CHECK(sat_member == power_lands);
  }
}

TEST_CASE("saturation chain identities on random monomial-plus-binomial ideals") {
  InstanceGen gen(R3, 5099);
  for (int iter = 0; iter < 60; ++iter) {
    Ideal I = gen.random_ideal(3, 3);
    Polynomial x = gen.random_variable();

    std::uint32_t n = static_cast<std::uint32_t>(gen.uniform(4));
    std::uint32_t m = static_cast<std::uint32_t>(gen.uniform(n + 1));
    auto [l1, r1] = saturation_intersection_sides(I, x, n, m);
    CHECK(equal(l1, r1));

    std::uint32_t n2 = 1 + static_cast<std::uint32_t>(gen.uniform(3));
    std::uint32_t m2 = 1 + static_cast<std::uint32_t>(gen.uniform(n2));
    std::uint32_t alpha = m2 + 1 + static_cast<std::uint32_t>(gen.uniform(n2 + 1 - m2));
    auto [l2, r2] = saturation_sum_sides(I, x, n2, m2, alpha);
    CHECK(equal(l2, r2));
  }
}

TEST_CASE("ideal parsing and printing") {
  Ideal I = idl(R2, "(x^2, x*y)");
  CHECK(ideal_str(I) == "(x^2, x*y)");  // reduced basis, leading terms descending
  CHECK(equal(parse_ideal("x^2", R2), idl(R2, "(x^2)")));
  CHECK_THROWS_AS(parse_ideal("(x", R2), ParseError);
}
